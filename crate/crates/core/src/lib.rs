//! Exact decomposition of finite-dimensional real representations of real
//! semisimple matrix Lie algebras into real irreducible summands.
//!
//! Everything is computed over ℚ(i), occasionally extended by a single square
//! root; there is no floating point anywhere.
//!
//! ```
//! use realrep::{decomp, repzoo};
//!
//! let g = repzoo::so_pq(3, 0).unwrap();
//! let cartan = repzoo::cartan_from_indices(&g, &[0]).unwrap();
//! let rep = repzoo::poly_rep(&g, 2).unwrap();
//! let report = decomp::decompose(&rep, &g, &cartan).unwrap();
//! let mut dims: Vec<usize> = report.components.iter().map(|c| c.dim).collect();
//! dims.sort();
//! assert_eq!(dims, vec![1, 5]);
//! ```

pub mod decomp;
pub mod exactnum;
pub mod liealg;
pub mod linalg;
pub mod rep;
pub mod repzoo;

mod error;

pub use error::{Error, Result, Step};
