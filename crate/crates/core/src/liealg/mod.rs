//! Real matrix Lie algebras, root data and Weyl group words.

mod algebra;
mod roots;
mod triples;
mod weyl;

pub use algebra::{bracket, verify_semisimple, CartanSubalgebra, LieAlgebra};
pub use roots::{
    cmp_values, conj_values, conjugation_permutation, find_root, is_positive_values, neg_values,
    positive_system, root_decomposition, simple_roots, Root,
};
pub use triples::{cartan_coords, reflect_root, sl2_triple, Sl2Triple};
pub use weyl::{borel_matching_word, omega_matrices, RootData, WeylWord};
