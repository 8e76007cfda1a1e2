use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mat::{rows_from_text, rows_to_text};
use super::Mat;
use crate::exactnum::{Field, Rat};
use crate::{Error, Result};

/// A subspace of `F^n` stored as the RREF of a basis, so two subspaces are
/// equal exactly when their stored bases are.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors (each of length `ambient`).
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let m = Mat::from_rows(ambient, vectors.to_vec()).expect("vector length");
        Self::row_space(&m)
    }

    pub fn row_space(m: &Mat<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Basis rows in RREF.
    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis, read off at the pivots.
    pub fn residual(&self, v: &[F]) -> Vec<F> {
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(self.basis.row(k)) {
                if !b.is_zero() {
                    *x = x.clone() - &(c.clone() * b);
                }
            }
        }
        r
    }

    pub fn contains_vec(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.residual(v).iter().all(Field::is_zero)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `Σ c_k b_k`.
    pub fn combine(&self, coeffs: &[F]) -> Vec<F> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![F::zero(); self.ambient];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, b) in out.iter_mut().zip(self.basis.row(k)) {
                *x = x.clone() + &(c.clone() * b);
            }
        }
        out
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.residual(v);
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[lead].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x = x.clone() * &inv;
        }
        let mut rows = self.basis.row_vecs();
        for row in rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let c = row[lead].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = x.clone() - &(c.clone() * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        rows.insert(at, r);
        self.pivots.insert(at, lead);
        self.basis = Mat::from_rows(self.ambient, rows).expect("rectangular");
        true
    }

    fn check_ambient(&self, o: &Self) -> Result<()> {
        if self.ambient != o.ambient {
            return Err(Error::AmbientMismatch(self.ambient, o.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, o: &Self) -> Result<Self> {
        self.check_ambient(o)?;
        Ok(Self::row_space(&Mat::vstack(
            self.ambient,
            &[&self.basis, &o.basis],
        )))
    }

    /// Vectors annihilating the subspace under the bilinear pairing `x·y`.
    pub fn annihilator(&self) -> Self {
        self.basis.nullspace()
    }

    pub fn intersect(&self, o: &Self) -> Result<Self> {
        self.check_ambient(o)?;
        let a = self.annihilator();
        let b = o.annihilator();
        Ok(Mat::vstack(self.ambient, &[a.basis(), b.basis()]).nullspace())
    }

    /// Whether `o ⊆ self`.
    pub fn contains(&self, o: &Self) -> Result<bool> {
        self.check_ambient(o)?;
        Ok(o.basis.row_vecs().iter().all(|v| self.contains_vec(v)))
    }

    /// Image under a linear map given by a square matrix.
    pub fn image(&self, op: &Mat<F>) -> Self {
        let rows: Vec<Vec<F>> = self
            .basis
            .row_vecs()
            .iter()
            .map(|v| op.mul_vec(v))
            .collect();
        Subspace::span(op.rows(), &rows)
    }

    pub fn is_invariant(&self, op: &Mat<F>) -> bool {
        self.basis
            .row_vecs()
            .iter()
            .all(|v| self.contains_vec(&op.mul_vec(v)))
    }

    /// Entrywise conjugate subspace.
    pub fn conj(&self) -> Self {
        Self::row_space(&self.basis.conj())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Subspace<G> {
        Subspace::row_space(&self.basis.map(f))
    }

    /// Matrix of `op` restricted to this (invariant) subspace, in the stored
    /// basis: column `j` holds the coordinates of `op·b_j`. Fails with
    /// `NotInvariant` if the subspace is not `op`-stable.
    pub fn restrict(&self, op: &Mat<F>) -> Result<Mat<F>> {
        let k = self.dim();
        let mut out = Mat::zeros(k, k);
        for (j, b) in self.basis.row_vecs().iter().enumerate() {
            let c = self.coords(&op.mul_vec(b)).ok_or(Error::NotInvariant)?;
            for (i, x) in c.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    /// The subspace as rationals, if its RREF basis has only rational entries.
    pub fn to_rat(&self) -> Option<Subspace<Rat>> {
        Some(Subspace {
            ambient: self.ambient,
            basis: self.basis.to_rat()?,
            pivots: self.pivots.clone(),
        })
    }

    /// Real form of a conjugation-stable subspace: the real span of the real
    /// and imaginary parts of its basis vectors. The result has the same
    /// dimension and its complexification is `self`.
    pub fn real_points(&self) -> Result<Self> {
        if self.conj() != *self {
            return Err(Error::NotSelfConjugate);
        }
        let mut rows = Vec::with_capacity(2 * self.dim());
        for v in self.basis.row_vecs() {
            rows.push(v.iter().map(Field::re_part).collect());
            rows.push(v.iter().map(Field::im_part).collect());
        }
        let real = Subspace::span(self.ambient, &rows);
        assert_eq!(real.dim(), self.dim(), "real points of a stable subspace");
        Ok(real)
    }
}

/// `s + t`.
pub fn subspace_sum<F: Field>(s: &Subspace<F>, t: &Subspace<F>) -> Result<Subspace<F>> {
    s.sum(t)
}

/// `s ∩ t`.
pub fn subspace_intersect<F: Field>(s: &Subspace<F>, t: &Subspace<F>) -> Result<Subspace<F>> {
    s.intersect(t)
}

/// Whether `t ⊆ s`.
pub fn contains<F: Field>(s: &Subspace<F>, t: &Subspace<F>) -> Result<bool> {
    s.contains(t)
}

/// Fixed points of coordinatewise conjugation inside `s`.
pub fn real_points<F: Field>(s: &Subspace<F>) -> Result<Subspace<F>> {
    s.real_points()
}

/// Whether two nonzero vectors are proportional.
pub fn linearly_dependent<F: Field>(v: &[F], u: &[F]) -> Result<bool> {
    if v.len() != u.len() {
        return Err(Error::AmbientMismatch(v.len(), u.len()));
    }
    if v.iter().all(Field::is_zero) || u.iter().all(Field::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(Subspace::span(v.len(), &[v.to_vec(), u.to_vec()]).dim() == 1)
}

#[derive(Serialize, Deserialize)]
struct SubspaceRepr {
    ambient_dim: usize,
    basis: Vec<Vec<String>>,
}

impl<F: Field> Serialize for Subspace<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceRepr {
            ambient_dim: self.ambient,
            basis: rows_to_text(&self.basis.row_vecs()),
        }
        .serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for Subspace<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SubspaceRepr::deserialize(d)?;
        let basis: Vec<Vec<F>> = rows_from_text(&r.basis).map_err(serde::de::Error::custom)?;
        if basis.iter().any(|v| v.len() != r.ambient_dim) {
            return Err(serde::de::Error::custom("basis vector of wrong length"));
        }
        Ok(Subspace::span(r.ambient_dim, &basis))
    }
}
