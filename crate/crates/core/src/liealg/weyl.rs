use serde::{Deserialize, Serialize};

use super::triples::cartan_coords;
use super::{
    conj_values, conjugation_permutation, is_positive_values, positive_system, reflect_root,
    root_decomposition, simple_roots, sl2_triple, CartanSubalgebra, LieAlgebra, Root, Sl2Triple,
};
use crate::exactnum::{Field, GaussRat};
use crate::linalg::{exp_nilpotent, to_gauss_vec, Mat, Subspace};
use crate::{Error, Result};

/// Simple-root letters `β_1 … β_l` with the element `ω = w_{β_1} … w_{β_l}`
/// realized in the defining representation and on `g^C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWord {
    /// Indices into the sorted list of simple roots.
    pub letters: Vec<usize>,
    pub omega_defining: Mat<GaussRat>,
    pub omega_adjoint: Mat<GaussRat>,
}

/// Letters `β_1 … β_l` with `p ∘ w_{β_1} ∘ … ∘ w_{β_l}` preserving `R⁺`.
///
/// Scans the simple roots in order and appends the first one sent negative
/// by the running composition. Each letter must lower the number of positive
/// roots sent negative.
pub fn borel_matching_word(positives: &[Root], simples: &[Sl2Triple]) -> Result<Vec<usize>> {
    let mut letters: Vec<usize> = Vec::new();
    let apply = |letters: &[usize], beta: &[GaussRat]| {
        let mut v = beta.to_vec();
        for &l in letters.iter().rev() {
            v = reflect_root(&v, &simples[l]);
        }
        conj_values(&v)
    };
    let bad = |letters: &[usize]| {
        positives
            .iter()
            .filter(|r| !is_positive_values(&apply(letters, &r.values)))
            .count()
    };
    let mut count = bad(&letters);
    while count > 0 {
        let next = simples
            .iter()
            .position(|s| !is_positive_values(&apply(&letters, &s.root)))
            .ok_or(Error::NonTerminating)?;
        letters.push(next);
        let c = bad(&letters);
        if c >= count || letters.len() > positives.len() {
            return Err(Error::NonTerminating);
        }
        count = c;
    }
    Ok(letters)
}

/// `Π exp(X)·exp(-Y)·exp(X)` over the letters, in the defining matrices and
/// in the adjoint action.
pub fn omega_matrices(
    g: &LieAlgebra,
    letters: &[usize],
    simples: &[Sl2Triple],
) -> Result<(Mat<GaussRat>, Mat<GaussRat>)> {
    let mut def = Mat::identity(g.n());
    let mut adj = Mat::identity(g.dim());
    for &l in letters {
        let t = &simples[l];
        let ny: Vec<GaussRat> = t.y.iter().map(|v| -v.clone()).collect();
        let (ex, ey) = (exp_nilpotent(&g.element(&t.x))?, exp_nilpotent(&g.element(&ny))?);
        def = def.mul(&ex).mul(&ey).mul(&ex);
        let (ax, ay) = (exp_nilpotent(&g.ad(&t.x))?, exp_nilpotent(&g.ad(&ny))?);
        adj = adj.mul(&ax).mul(&ay).mul(&ax);
    }
    Ok((def, adj))
}

/// Everything derived from `(g, c)`: roots, simple roots with their triples,
/// the conjugation permutation, the Weyl word, and the matrix of `Θ`.
#[derive(Clone, Debug)]
pub struct RootData {
    pub cartan: CartanSubalgebra,
    /// All roots in increasing order.
    pub roots: Vec<Root>,
    pub positives: Vec<Root>,
    pub simples: Vec<Root>,
    pub simple_triples: Vec<Sl2Triple>,
    /// `roots[perm[i]]` is the conjugate of `roots[i]`.
    pub perm: Vec<usize>,
    pub word: WeylWord,
    /// Row `i` holds the Cartan coordinates of `ω h_i ω⁻¹`.
    theta_rows: Vec<Vec<GaussRat>>,
}

impl RootData {
    pub fn new(g: &LieAlgebra, c: &CartanSubalgebra) -> Result<Self> {
        if !g.is_semisimple() {
            return Err(Error::NotSemisimpleAlgebra);
        }
        let roots = root_decomposition(g, c)?;
        let (positives, _) = positive_system(&roots);
        let simples = simple_roots(&positives);
        let simple_triples = simples
            .iter()
            .map(|s| {
                let idx = super::find_root(&roots, &s.values).expect("simple root is a root");
                sl2_triple(g, c, &roots, idx)
            })
            .collect::<Result<Vec<_>>>()?;
        let perm = conjugation_permutation(&roots)?;
        let letters = borel_matching_word(&positives, &simple_triples)?;
        let (omega_defining, omega_adjoint) = omega_matrices(g, &letters, &simple_triples)?;
        let theta_rows = c
            .elements()
            .iter()
            .map(|h| {
                cartan_coords(c, &omega_adjoint.mul_vec(&to_gauss_vec(h)))
                    .ok_or_else(|| Error::NotCartan("omega does not normalize the Cartan".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootData {
            cartan: c.clone(),
            roots,
            positives,
            simples,
            simple_triples,
            perm,
            word: WeylWord {
                letters,
                omega_defining,
                omega_adjoint,
            },
            theta_rows,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// `Θ(λ) = ω⁻¹ λ^σ`, i.e. `Θ(λ)(h) = conj(λ(ω h ω⁻¹))` for real `h`.
    pub fn theta(&self, lambda: &[GaussRat]) -> Vec<GaussRat> {
        let lc = conj_values(lambda);
        self.theta_rows
            .iter()
            .map(|row| crate::linalg::dot(row, &lc))
            .collect()
    }

    /// Sum of the positive root spaces, in algebra coordinates.
    pub fn nilradical(&self) -> Subspace<GaussRat> {
        let vecs: Vec<Vec<GaussRat>> = self.positives.iter().flat_map(|r| r.space.vectors()).collect();
        let ambient = self.positives.first().map_or(0, |r| r.space.ambient_dim());
        Subspace::span(ambient, &vecs)
    }

    /// `ω 𝔶 ω⁻¹ = σ(𝔶)`, checked on `g^C` and in the defining matrices.
    pub fn omega_conjugates_nilradical(&self, g: &LieAlgebra) -> bool {
        let y = self.nilradical();
        if y.image(&self.word.omega_adjoint) != y.conj() {
            return false;
        }
        let w = &self.word.omega_defining;
        let Some(winv) = w.inverse() else {
            return false;
        };
        let conj_y = y.conj();
        y.vectors().iter().all(|v| {
            let m = w.mul(&g.element(v)).mul(&winv);
            g.coords_c(&m).is_some_and(|c| conj_y.contains_vec(&c))
        })
    }

    /// `σ(g_α) = g_{p(α)}` and `p² = id`.
    pub fn check_permutation(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| {
            self.perm[j] == i && self.roots[i].space.conj() == self.roots[j].space
        })
    }

    /// Whether a value vector is a root.
    pub fn is_root(&self, v: &[GaussRat]) -> bool {
        self.roots.iter().any(|r| r.values == v)
    }

    /// `ω⁻¹ μ` computed by reflections, `w_{β_1}` applied first.
    pub fn omega_inv_weight(&self, mu: &[GaussRat]) -> Vec<GaussRat> {
        self.word
            .letters
            .iter()
            .fold(mu.to_vec(), |v, &l| reflect_root(&v, &self.simple_triples[l]))
    }

    pub fn zero_weight(&self) -> Vec<GaussRat> {
        vec![GaussRat::zero(); self.rank()]
    }
}
