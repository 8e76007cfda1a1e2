//! Exact dense linear algebra over the scalar tower.

mod eigen;
mod exp;
mod mat;
mod poly;
mod roots;
mod subspace;

pub use eigen::{simultaneous_eigenspaces, JointEigenspace};
pub use exp::exp_nilpotent;
pub use mat::{dot, Mat};
pub use poly::{char_poly, Poly};
pub use roots::{gauss_rational_roots, RootSet};
pub use subspace::{
    contains, linearly_dependent, real_points, subspace_intersect, subspace_sum, Subspace,
};

use crate::exactnum::{Field, GaussRat, Rat};

/// Lifts a rational vector into ℚ(i).
pub fn to_gauss_vec(v: &[Rat]) -> Vec<GaussRat> {
    v.iter().map(|x| GaussRat::real(x.clone())).collect()
}

pub fn conj_vec<F: Field>(v: &[F]) -> Vec<F> {
    v.iter().map(Field::conj).collect()
}

pub fn re_vec<F: Field>(v: &[F]) -> Vec<F> {
    v.iter().map(Field::re_part).collect()
}

pub fn im_vec<F: Field>(v: &[F]) -> Vec<F> {
    v.iter().map(Field::im_part).collect()
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Field::is_zero)
}

pub fn scale_vec<F: Field>(v: &[F], k: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * k).collect()
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y).collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}
