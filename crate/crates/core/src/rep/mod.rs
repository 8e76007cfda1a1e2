//! Representations of a matrix Lie algebra on `ℚ^N`, highest weights, the
//! Weyl-word element `ω_ρ` and invariant closures.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Field, GaussRat, Rat};
use crate::liealg::{LieAlgebra, RootData};
use crate::linalg::{conj_vec, exp_nilpotent, simultaneous_eigenspaces, to_gauss_vec, Mat, Subspace};
use crate::{Error, Result};

/// Images `ρ(b_i)` of the algebra basis.
///
/// When `anti` is set the images satisfy `ρ([a,b]) = -[ρ(a), ρ(b)]`, as for
/// vector-field actions; the engine then works with `-ρ`, which is a
/// homomorphism with the same invariant subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    images: Vec<Mat<Rat>>,
    anti: bool,
}

impl Representation {
    pub fn new(g: &LieAlgebra, images: Vec<Mat<Rat>>, anti: bool) -> Result<Self> {
        if images.len() != g.dim() {
            return Err(Error::SizeMismatch(format!(
                "{} images for an algebra of dimension {}",
                images.len(),
                g.dim()
            )));
        }
        let dim = images.first().map_or(0, Mat::rows);
        if images.iter().any(|m| !m.is_square() || m.rows() != dim) {
            return Err(Error::SizeMismatch("images must all be N x N".into()));
        }
        let rep = Representation { dim, images, anti };
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = rep.raw_image(&g.structure_constants(i, j));
                let mut rhs = rep.images[i].commutator(&rep.images[j]);
                if anti {
                    rhs = rhs.neg();
                }
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(i, j));
                }
            }
        }
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[Mat<Rat>] {
        &self.images
    }

    pub fn is_anti(&self) -> bool {
        self.anti
    }

    /// `Σ c_i ρ(b_i)` with the stored images.
    pub fn raw_image<F: Field>(&self, coeffs: &[F]) -> Mat<F> {
        let mut out = Mat::zeros(self.dim, self.dim);
        for (c, m) in coeffs.iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&m.map(|x| c.clone() * &F::from_rat(x)));
            }
        }
        out
    }

    /// The homomorphism the engine works with: `ρ`, or `-ρ` when anti.
    pub fn image<F: Field>(&self, coeffs: &[F]) -> Mat<F> {
        let m = self.raw_image(coeffs);
        if self.anti {
            m.neg()
        } else {
            m
        }
    }

    /// Images of the basis as generators of the action, over any field.
    pub fn generators<F: Field>(&self) -> Vec<Mat<F>> {
        self.images.iter().map(|m| m.map(F::from_rat)).collect()
    }
}

/// A highest weight vector in `V^C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    pub weight: Vec<GaussRat>,
    pub vec: Vec<GaussRat>,
}

/// All highest weight vectors of one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicalComponent {
    pub weight: Vec<GaussRat>,
    pub hw_basis: Vec<WeightVector>,
    /// Span of `hw_basis`.
    pub hw_space: Subspace<GaussRat>,
}

impl IsotypicalComponent {
    pub fn multiplicity(&self) -> usize {
        self.hw_basis.len()
    }
}

/// Joint null space of the simple root vectors, split into Cartan eigenspaces.
pub fn highest_weights(rep: &Representation, rd: &RootData) -> Result<Vec<IsotypicalComponent>> {
    let n = rep.dim();
    let ops: Vec<Mat<GaussRat>> = rd.simple_triples.iter().map(|t| rep.image(&t.x)).collect();
    let refs: Vec<&Mat<GaussRat>> = ops.iter().collect();
    let null = if refs.is_empty() {
        Subspace::full(n)
    } else {
        Mat::vstack(n, &refs).nullspace()
    };
    debug_assert!(rd.positives.iter().all(|r| {
        r.space
            .vectors()
            .iter()
            .all(|x| null.vectors().iter().all(|v| rep.image(x).mul_vec(v).iter().all(Field::is_zero)))
    }));
    let cartan: Vec<Mat<GaussRat>> = rd
        .cartan
        .elements()
        .iter()
        .map(|h| rep.image(&to_gauss_vec(h)))
        .collect();
    Ok(simultaneous_eigenspaces(&cartan, &null)?
        .into_iter()
        .map(|(weight, space)| IsotypicalComponent {
            hw_basis: space
                .vectors()
                .into_iter()
                .map(|vec| WeightVector {
                    weight: weight.clone(),
                    vec,
                })
                .collect(),
            weight,
            hw_space: space,
        })
        .collect())
}

/// `ω_ρ = Π exp(ρX)·exp(-ρY)·exp(ρX)` over the Weyl word.
pub fn omega_rho(rep: &Representation, rd: &RootData) -> Result<Mat<GaussRat>> {
    let mut out = Mat::identity(rep.dim());
    for &l in &rd.word.letters {
        let t = &rd.simple_triples[l];
        let ex = exp_nilpotent(&rep.image(&t.x))?;
        let ey = exp_nilpotent(&rep.image(&t.y).neg())?;
        out = out.mul(&ex).mul(&ey).mul(&ex);
    }
    Ok(out)
}

/// `ρ(ω b ω⁻¹) = ω_ρ ρ(b) ω_ρ⁻¹` for every basis element `b`.
pub fn check_intertwining(rep: &Representation, g: &LieAlgebra, rd: &RootData, omega: &Mat<GaussRat>) -> bool {
    let Some(inv) = omega.inverse() else {
        return false;
    };
    (0..g.dim()).all(|i| {
        let b: Vec<GaussRat> = (0..g.dim()).map(|k| GaussRat::int((k == i) as i64)).collect();
        let moved = rd.word.omega_adjoint.mul_vec(&b);
        rep.image(&moved) == omega.mul(&rep.image(&b)).mul(&inv)
    })
}

/// Smallest subspace containing `seed` and stable under every generator.
/// Vectors are processed first in, first out, generators in basis order.
pub fn invariant_span<F: Field>(rep: &Representation, seed: &[F]) -> Subspace<F> {
    invariant_span_of(&rep.generators(), &[seed.to_vec()], rep.dim())
}

/// Closure of several seeds under a list of operators.
pub fn invariant_span_of<F: Field>(ops: &[Mat<F>], seeds: &[Vec<F>], n: usize) -> Subspace<F> {
    let mut space = Subspace::zero(n);
    let mut queue: VecDeque<Vec<F>> = VecDeque::new();
    for s in seeds {
        if space.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let w = op.mul_vec(&v);
            if space.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    space
}

/// Coordinatewise conjugation of `V^C = V ⊕ iV`.
pub fn conj_vector<F: Field>(v: &[F]) -> Vec<F> {
    conj_vec(v)
}

/// `T(v) = ω_ρ⁻¹ v̄`; maps highest weight vectors of weight `λ` to ones of
/// weight `Θ(λ)`.
pub fn twist<F: Field>(omega_inv: &Mat<F>, v: &[F]) -> Vec<F> {
    omega_inv.mul_vec(&conj_vec(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repzoo::{adjoint_rep, cartan_from_indices, defining_rep, endo_left_rep, poly_rep, so_pq};

    fn so(p: usize, q: usize, idx: &[usize]) -> (LieAlgebra, RootData) {
        let g = so_pq(p, q).unwrap();
        let rd = RootData::new(&g, &cartan_from_indices(&g, idx).unwrap()).unwrap();
        (g, rd)
    }

    #[test]
    fn rejects_non_representations() {
        let g = so_pq(3, 0).unwrap();
        let mut images = g.basis().to_vec();
        images.swap(0, 1);
        assert!(matches!(Representation::new(&g, images, false), Err(Error::NotHomomorphism(_, _))));
        let images = vec![Mat::identity(2); 2];
        assert!(matches!(Representation::new(&g, images, false), Err(Error::SizeMismatch(_))));
        // the transpose action is an anti-homomorphism only
        let t: Vec<Mat<Rat>> = g.basis().iter().map(Mat::transpose).collect();
        assert!(Representation::new(&g, t.clone(), false).is_err());
        assert!(Representation::new(&g, t, true).is_ok());
    }

    #[test]
    fn endo_left_highest_weights() {
        let (g, rd) = so(3, 0, &[0]);
        let rep = endo_left_rep(&g).unwrap();
        let comps = highest_weights(&rep, &rd).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].weight, rd.positives[0].values);
        assert_eq!(comps[0].multiplicity(), 3);
        // each column of a highest weight matrix is a highest weight vector of ℂ³
        let x = rep.image::<GaussRat>(&rd.simple_triples[0].x);
        for w in &comps[0].hw_basis {
            assert!(x.mul_vec(&w.vec).iter().all(Field::is_zero));
        }
    }

    #[test]
    fn omega_rho_on_defining_and_adjoint() {
        let (g, rd) = so(4, 0, &[0, 5]);
        assert_eq!(omega_rho(&defining_rep(&g).unwrap(), &rd).unwrap(), rd.word.omega_defining);
        assert_eq!(omega_rho(&adjoint_rep(&g).unwrap(), &rd).unwrap(), rd.word.omega_adjoint);
        for rep in [adjoint_rep(&g).unwrap(), poly_rep(&g, 3).unwrap(), endo_left_rep(&g).unwrap()] {
            let om = omega_rho(&rep, &rd).unwrap();
            assert!(check_intertwining(&rep, &g, &rd, &om));
            assert!(!check_intertwining(&rep, &g, &rd, &Mat::identity(rep.dim()).scale(&GaussRat::int(0))));
        }
    }

    #[test]
    fn twist_moves_weights_by_theta() {
        let (g, rd) = so(1, 3, &[0, 5]);
        let rep = adjoint_rep(&g).unwrap();
        let inv = omega_rho(&rep, &rd).unwrap().inverse().unwrap();
        let comps = highest_weights(&rep, &rd).unwrap();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            let target = rd.theta(&c.weight);
            assert_ne!(target, c.weight);
            let other = comps.iter().find(|o| o.weight == target).unwrap();
            for w in &c.hw_basis {
                assert!(other.hw_space.contains_vec(&twist(&inv, &w.vec)));
            }
        }
    }

    #[test]
    fn closures() {
        let g = so_pq(3, 0).unwrap();
        let rep = poly_rep(&g, 2).unwrap();
        let zero = vec![Rat::zero(); 6];
        assert_eq!(invariant_span(&rep, &zero).dim(), 0);
        // x² + y² + z² is invariant
        let r2 = crate::repzoo::MonomialBasis::new(3, 2).vector(&[(1, vec![2, 0, 0]), (1, vec![0, 2, 0]), (1, vec![0, 0, 2])]);
        assert_eq!(invariant_span(&rep, &r2).dim(), 1);
        let xy = crate::repzoo::MonomialBasis::new(3, 2).vector(&[(1, vec![1, 1, 0])]);
        assert_eq!(invariant_span(&rep, &xy).dim(), 5);
        let v = vec![GaussRat::new(Rat::one(), Rat::one()), GaussRat::i()];
        assert_eq!(conj_vector(&v), vec![GaussRat::new(Rat::one(), -Rat::one()), -GaussRat::i()]);
    }
}
