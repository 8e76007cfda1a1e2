use crate::exactnum::{Field, GaussRat, Rat};
use crate::linalg::Mat;
use crate::{Error, Result};

/// `ab - ba`, checking shapes.
pub fn bracket<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Mat<F>> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::SizeMismatch(format!(
            "bracket of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.commutator(b))
}

/// A real matrix Lie algebra given by a basis of `n×n` rational matrices.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    n: usize,
    basis: Vec<Mat<Rat>>,
    /// Flattened basis matrices as columns, for coordinate solves.
    columns: Mat<Rat>,
    /// `ad(b_i)` in basis coordinates.
    ad: Vec<Mat<Rat>>,
}

impl LieAlgebra {
    /// Checks shapes, linear independence and closure under the bracket, and
    /// caches the structure constants.
    pub fn new(basis: Vec<Mat<Rat>>) -> Result<Self> {
        let n = basis.first().map_or(0, Mat::rows);
        if basis.iter().any(|b| !b.is_square() || b.rows() != n) {
            return Err(Error::SizeMismatch("basis matrices must all be n x n".into()));
        }
        let dim = basis.len();
        let flat: Vec<Vec<Rat>> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let columns = Mat::from_rows(n * n, flat).expect("square").transpose();
        if columns.rank() != dim {
            return Err(Error::SizeMismatch("basis matrices are linearly dependent".into()));
        }
        let mut g = LieAlgebra {
            n,
            basis,
            columns,
            ad: Vec::new(),
        };
        let mut ad = vec![Mat::zeros(dim, dim); dim];
        for (i, adi) in ad.iter_mut().enumerate() {
            for j in 0..dim {
                let c = g.basis[i].commutator(&g.basis[j]);
                let coords = g.coords(&c).ok_or(Error::NotClosed(i, j))?;
                for (k, x) in coords.into_iter().enumerate() {
                    adi.set(k, j, x);
                }
            }
        }
        g.ad = ad;
        Ok(g)
    }

    /// Size `n` of the defining matrices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Mat<Rat>] {
        &self.basis
    }

    /// Coordinates of a matrix in the basis, if it lies in the span.
    pub fn coords(&self, m: &Mat<Rat>) -> Option<Vec<Rat>> {
        if m.rows() != self.n || m.cols() != self.n {
            return None;
        }
        self.columns.solve(m.entries())
    }

    /// Coordinates of a complex matrix in the (real) basis.
    pub fn coords_c(&self, m: &Mat<GaussRat>) -> Option<Vec<GaussRat>> {
        let re = self.coords(&m.map(|z| z.re.clone()))?;
        let im = self.coords(&m.map(|z| z.im.clone()))?;
        Some(re.into_iter().zip(im).map(|(a, b)| GaussRat::new(a, b)).collect())
    }

    /// `Σ c_i b_i`.
    pub fn element<F: Field>(&self, coeffs: &[F]) -> Mat<F> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Mat::zeros(self.n, self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            out = out.add(&b.map(|x| c.clone() * &F::from_rat(x)));
        }
        out
    }

    /// `ad(b_i)` in basis coordinates.
    pub fn ad_basis(&self, i: usize) -> &Mat<Rat> {
        &self.ad[i]
    }

    /// `ad(x)` for `x = Σ c_i b_i`.
    pub fn ad<F: Field>(&self, coeffs: &[F]) -> Mat<F> {
        let d = self.dim();
        let mut out = Mat::zeros(d, d);
        for (c, a) in coeffs.iter().zip(&self.ad) {
            if c.is_zero() {
                continue;
            }
            out = out.add(&a.map(|x| c.clone() * &F::from_rat(x)));
        }
        out
    }

    /// Bracket in coordinates.
    pub fn bracket_coords<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.ad(x).mul_vec(y)
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> Vec<Rat> {
        self.ad[i].col(j)
    }

    /// `K(b_i, b_j) = tr(ad b_i · ad b_j)`.
    pub fn killing_form(&self) -> Mat<Rat> {
        let d = self.dim();
        let mut k = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                k.set(i, j, self.ad[i].mul(&self.ad[j]).trace());
            }
        }
        k
    }

    /// Whether the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.killing_form().rank() == self.dim()
    }
}

/// Killing-form criterion for a set of matrices that is supposed to span a Lie
/// algebra; fails with `NotClosed` if it does not.
pub fn verify_semisimple(basis: &[Mat<Rat>]) -> Result<bool> {
    Ok(LieAlgebra::new(basis.to_vec())?.is_semisimple())
}

/// An ordered basis `h_1 … h_r` of a Cartan subalgebra, as coordinate vectors
/// in the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSubalgebra {
    elements: Vec<Vec<Rat>>,
}

impl CartanSubalgebra {
    pub fn new(g: &LieAlgebra, elements: Vec<Vec<Rat>>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::NotCartan("empty basis".into()));
        }
        if elements.iter().any(|h| h.len() != g.dim()) {
            return Err(Error::SizeMismatch("Cartan element coordinate length".into()));
        }
        Ok(CartanSubalgebra { elements })
    }

    /// Cartan basis made of algebra basis elements.
    pub fn from_indices(g: &LieAlgebra, idx: &[usize]) -> Result<Self> {
        let elems = idx
            .iter()
            .map(|&i| {
                if i >= g.dim() {
                    return Err(Error::NotCartan(format!("no basis element e{}", i + 1)));
                }
                Ok((0..g.dim())
                    .map(|k| crate::exactnum::rat((k == i) as i64))
                    .collect())
            })
            .collect::<Result<_>>()?;
        Self::new(g, elems)
    }

    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<Rat>] {
        &self.elements
    }
}
