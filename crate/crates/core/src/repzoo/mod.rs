//! Builders for the standard algebras and representations.

use crate::exactnum::{rat, Field, Rat};
use crate::liealg::{CartanSubalgebra, LieAlgebra};
use crate::linalg::Mat;
use crate::rep::Representation;
use crate::{Error, Result};

/// `so(p, q)` preserving `diag(1,…,1,-1,…,-1)`.
///
/// Basis: for `i < j` in row-major order, `e_ij - e_ji` when the two signs
/// agree and `e_ij + e_ji` otherwise.
pub fn so_pq(p: usize, q: usize) -> Result<LieAlgebra> {
    let n = p + q;
    if n < 2 {
        return Err(Error::BadSignature(p, q));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let same = (i < p) == (j < p);
            let eij = Mat::<Rat>::unit(n, i, j);
            let eji = Mat::<Rat>::unit(n, j, i);
            basis.push(if same { eij.sub(&eji) } else { eij.add(&eji) });
        }
    }
    LieAlgebra::new(basis)
}

/// `sl(n, ℝ)`: `h_k = E_kk - E_{k+1,k+1}` first, then the `E_ij`, `i ≠ j`,
/// in row-major order.
pub fn sl_n(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::SizeMismatch(format!("sl({n})")));
    }
    let mut basis = Vec::new();
    for k in 0..n - 1 {
        basis.push(Mat::<Rat>::unit(n, k, k).sub(&Mat::unit(n, k + 1, k + 1)));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(Mat::unit(n, i, j));
            }
        }
    }
    LieAlgebra::new(basis)
}

/// `su(2)` realified: left multiplication by the quaternion units `i, j, k`
/// on `ℍ = ℝ⁴` with basis `1, i, j, k`.
pub fn su2_realified() -> Result<LieAlgebra> {
    LieAlgebra::new(quaternion_left().to_vec())
}

fn quaternion_left() -> [Mat<Rat>; 3] {
    [
        Mat::from_ints(4, 4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0]),
        Mat::from_ints(4, 4, &[0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0]),
        Mat::from_ints(4, 4, &[0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0]),
    ]
}

/// Cartan basis made of algebra basis elements (zero-based indices).
pub fn cartan_from_indices(g: &LieAlgebra, idx: &[usize]) -> Result<CartanSubalgebra> {
    CartanSubalgebra::from_indices(g, idx)
}

/// Disjoint adjacent rotation/boost pairs `(1,2), (3,4), …` of `so(p, q)`.
pub fn so_default_cartan(g: &LieAlgebra, p: usize, q: usize) -> Result<CartanSubalgebra> {
    let n = p + q;
    let index = |i: usize, j: usize| (0..i).map(|r| n - 1 - r).sum::<usize>() + (j - i - 1);
    let idx: Vec<usize> = (0..n / 2).map(|k| index(2 * k, 2 * k + 1)).collect();
    cartan_from_indices(g, &idx)
}

/// Diagonal Cartan of `sl(n)` spanned by `h_1` and `h_2 … h_{n-1}`, with `h_1`
/// replaced by a regular element. With `increasing` the diagonal increases
/// down the matrix, which makes the lower triangular root vectors positive.
pub fn sl_cartan(g: &LieAlgebra, n: usize, increasing: bool) -> Result<CartanSubalgebra> {
    let r = n - 1;
    let mut elems = Vec::new();
    // diag(n-1, n-3, …, 1-n) in the h_k basis has coefficients k(n-k)
    let sign = if increasing { -1 } else { 1 };
    let mut first = vec![rat(0); g.dim()];
    for (k, c) in first.iter_mut().enumerate().take(r) {
        *c = rat(sign * ((k + 1) * (n - k - 1)) as i64);
    }
    elems.push(first);
    for k in 1..r {
        let mut h = vec![rat(0); g.dim()];
        h[k] = rat(1);
        elems.push(h);
    }
    CartanSubalgebra::new(g, elems)
}

/// Exponent vectors of degree-`d` monomials in `n` variables, graded
/// lexicographic with `x_1` greatest, so `x_1^d` comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub n_vars: usize,
    pub degree: usize,
    pub monomials: Vec<Vec<usize>>,
}

impl MonomialBasis {
    pub fn new(n_vars: usize, degree: usize) -> Self {
        fn rec(left: usize, vars: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if vars == 1 {
                prefix.push(left);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(left - e, vars - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut monomials = Vec::new();
        if n_vars > 0 {
            rec(degree, n_vars, &mut Vec::new(), &mut monomials);
        }
        MonomialBasis {
            n_vars,
            degree,
            monomials,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index(&self, exps: &[usize]) -> Option<usize> {
        self.monomials.iter().position(|m| m == exps)
    }

    /// Coordinates of a polynomial given as `(coefficient, exponents)` terms.
    pub fn vector(&self, terms: &[(i64, Vec<usize>)]) -> Vec<Rat> {
        let mut v = vec![rat(0); self.len()];
        for (c, e) in terms {
            let i = self.index(e).expect("monomial of the right degree");
            v[i] = v[i].clone() + rat(*c);
        }
        v
    }

    /// Matrix of `Σ a_ij x_j ∂/∂x_i` in this basis.
    pub fn vector_field(&self, a: &Mat<Rat>) -> Mat<Rat> {
        let n = self.len();
        let mut m = Mat::<Rat>::zeros(n, n);
        for (col, mono) in self.monomials.iter().enumerate() {
            for i in 0..self.n_vars {
                if mono[i] == 0 {
                    continue;
                }
                for j in 0..self.n_vars {
                    let aij = a.get(i, j);
                    if Field::is_zero(aij) {
                        continue;
                    }
                    let mut e = mono.clone();
                    e[i] -= 1;
                    e[j] += 1;
                    let row = self.index(&e).expect("same degree");
                    let c = aij.clone() * rat(mono[i] as i64);
                    m.set(row, col, m.get(row, col).clone() + c);
                }
            }
        }
        m
    }
}

/// Degree-`d` homogeneous polynomials, `A ↦ Σ a_ij x_j ∂/∂x_i`. This is an
/// anti-homomorphism and is flagged as such.
pub fn poly_rep(g: &LieAlgebra, d: usize) -> Result<Representation> {
    let mb = MonomialBasis::new(g.n(), d);
    let images = g.basis().iter().map(|a| mb.vector_field(a)).collect();
    Representation::new(g, images, true)
}

/// The defining representation on `ℝ^n`.
pub fn defining_rep(g: &LieAlgebra) -> Result<Representation> {
    Representation::new(g, g.basis().to_vec(), false)
}

/// `ρ(A)X = AX` on `n×n` matrices, coordinates `e_ij` in row-major order.
pub fn endo_left_rep(g: &LieAlgebra) -> Result<Representation> {
    let id = Mat::identity(g.n());
    let images = g.basis().iter().map(|a| a.kron(&id)).collect();
    Representation::new(g, images, false)
}

/// `ad(b_i)` in basis coordinates.
pub fn adjoint_rep(g: &LieAlgebra) -> Result<Representation> {
    let images = (0..g.dim()).map(|i| g.ad_basis(i).clone()).collect();
    Representation::new(g, images, false)
}

/// `A ⊗ I + I ⊗ A` on `x_i ⊗ x_j`, row-major.
pub fn tensor_square_rep(g: &LieAlgebra) -> Result<Representation> {
    let id = Mat::identity(g.n());
    let images = g
        .basis()
        .iter()
        .map(|a| a.kron(&id).add(&id.kron(a)))
        .collect();
    Representation::new(g, images, false)
}

/// Named algebra with its default Cartan: `so(p,q)`, `sl(n)` or `su(2)`.
pub fn named_algebra(name: &str) -> Result<(LieAlgebra, CartanSubalgebra)> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = |prefix: &str| {
        s.strip_prefix(prefix)
            .and_then(|r| r.strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
            .map(str::to_owned)
    };
    let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad algebra {name:?}")));
    if let Some(args) = inner("so") {
        let parts: Vec<&str> = args.split(',').collect();
        let (p, q) = match parts.as_slice() {
            [p] => (num(p)?, 0),
            [p, q] => (num(p)?, num(q)?),
            _ => return Err(Error::Parse(format!("bad algebra {name:?}"))),
        };
        let g = so_pq(p, q)?;
        let c = so_default_cartan(&g, p, q)?;
        return Ok((g, c));
    }
    if let Some(args) = inner("sl") {
        let n = num(&args)?;
        let g = sl_n(n)?;
        let c = sl_cartan(&g, n, false)?;
        return Ok((g, c));
    }
    if s == "su(2)" {
        let g = su2_realified()?;
        let c = cartan_from_indices(&g, &[0])?;
        return Ok((g, c));
    }
    Err(Error::Parse(format!("unknown algebra {name:?}")))
}

/// Representation by kind: `defining`, `adjoint`, `end-left`, `poly:d`,
/// `tensor2`.
pub fn named_rep(g: &LieAlgebra, kind: &str) -> Result<Representation> {
    match kind.trim() {
        "defining" => defining_rep(g),
        "adjoint" => adjoint_rep(g),
        "end-left" => endo_left_rep(g),
        "tensor2" => tensor_square_rep(g),
        k => {
            let d = k
                .strip_prefix("poly:")
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| d >= 1)
                .ok_or_else(|| Error::Parse(format!("unknown representation {kind:?}")))?;
            poly_rep(g, d)
        }
    }
}
