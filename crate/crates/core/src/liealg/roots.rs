use std::cmp::Ordering;

use super::{CartanSubalgebra, LieAlgebra};
use crate::exactnum::{is_positive_complex, Field, GaussRat};
use crate::linalg::{simultaneous_eigenspaces, Mat, Subspace};
use crate::{Error, Result};

/// A root: its values on the ordered Cartan basis and its root space in
/// `g^C`, given in algebra-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub values: Vec<GaussRat>,
    pub space: Subspace<GaussRat>,
    pub positive: bool,
}

/// Positive in the complex order: the first nonzero value is positive.
pub fn is_positive_values(values: &[GaussRat]) -> bool {
    values
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(is_positive_complex)
}

/// Compares value vectors by the sign of their difference.
pub fn cmp_values(a: &[GaussRat], b: &[GaussRat]) -> Ordering {
    let diff: Vec<GaussRat> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    if diff.iter().all(Field::is_zero) {
        Ordering::Equal
    } else if is_positive_values(&diff) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

pub fn neg_values(v: &[GaussRat]) -> Vec<GaussRat> {
    v.iter().map(|x| -x.clone()).collect()
}

pub fn conj_values(v: &[GaussRat]) -> Vec<GaussRat> {
    v.iter().map(Field::conj).collect()
}

/// Joint eigenvalues of `ad(h_1) … ad(h_r)` on `g^C`.
///
/// Verifies that the Cartan elements commute, are independent, and that their
/// joint zero eigenspace is exactly their span. Roots come out sorted by the
/// complex order, positives last.
pub fn root_decomposition(g: &LieAlgebra, c: &CartanSubalgebra) -> Result<Vec<Root>> {
    let hs = c.elements();
    let indep = Mat::from_rows(g.dim(), hs.to_vec()).expect("lengths").rank();
    if indep != hs.len() {
        return Err(Error::NotCartan("Cartan elements are dependent".into()));
    }
    let ads: Vec<Mat<GaussRat>> = hs.iter().map(|h| g.ad(h).to_gauss()).collect();
    for (i, a) in ads.iter().enumerate() {
        for b in &ads[i + 1..] {
            if !a.commutator(b).is_zero() {
                return Err(Error::NotCartan("Cartan elements do not commute".into()));
            }
        }
    }
    let blocks = simultaneous_eigenspaces(&ads, &Subspace::full(g.dim())).map_err(|e| match e {
        Error::NotSemisimple => Error::NotCartan("ad(h) is not diagonalizable".into()),
        e => e,
    })?;
    let mut roots = Vec::new();
    for (values, space) in blocks {
        if values.iter().all(Field::is_zero) {
            if space.dim() != hs.len() {
                return Err(Error::NotCartan(format!(
                    "centralizer has dimension {} but the Cartan basis has {}",
                    space.dim(),
                    hs.len()
                )));
            }
            continue;
        }
        let positive = is_positive_values(&values);
        roots.push(Root {
            values,
            space,
            positive,
        });
    }
    roots.sort_by(|a, b| cmp_values(&a.values, &b.values));
    Ok(roots)
}

/// Splits roots into positive and negative ones.
pub fn positive_system(roots: &[Root]) -> (Vec<Root>, Vec<Root>) {
    roots.iter().cloned().partition(|r| r.positive)
}

/// Positive roots that are not the sum of two positive roots, in increasing
/// complex order.
pub fn simple_roots(positives: &[Root]) -> Vec<Root> {
    let is_sum = |r: &Root| {
        positives.iter().any(|a| {
            let rest: Vec<GaussRat> = r.values.iter().zip(&a.values).map(|(x, y)| x - y).collect();
            positives.iter().any(|b| b.values == rest)
        })
    };
    let mut out: Vec<Root> = positives.iter().filter(|r| !is_sum(r)).cloned().collect();
    out.sort_by(|a, b| cmp_values(&a.values, &b.values));
    out
}

/// The permutation `p` of roots induced by conjugation, as indices into
/// `roots`. With a real Cartan basis `λ^σ` is the entrywise conjugate.
/// Checks that `σ` maps each root space onto the root space of `p(α)`.
pub fn conjugation_permutation(roots: &[Root]) -> Result<Vec<usize>> {
    roots
        .iter()
        .map(|r| {
            let target = conj_values(&r.values);
            let j = roots
                .iter()
                .position(|s| s.values == target)
                .ok_or_else(|| Error::NotCartan("root set is not conjugation stable".into()))?;
            if r.space.conj() != roots[j].space {
                return Err(Error::NotCartan("conjugation does not permute root spaces".into()));
            }
            Ok(j)
        })
        .collect()
}

/// Position of a value vector in the root list.
pub fn find_root(roots: &[Root], values: &[GaussRat]) -> Option<usize> {
    roots.iter().position(|r| r.values == values)
}
