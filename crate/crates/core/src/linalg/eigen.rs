use super::{char_poly, gauss_rational_roots, Mat, Subspace};
use crate::exactnum::GaussRat;
use crate::{Error, Result};

/// A joint eigenspace: one eigenvalue per family member, in family order.
pub type JointEigenspace = (Vec<GaussRat>, Subspace<GaussRat>);

/// Splits `within` into joint eigenspaces of a commuting family.
///
/// Each operator is restricted to `within`, the blocks are refined one operator
/// at a time, and eigenvalues are found exactly in ℚ(i). Blocks come out in
/// lexicographic order of their eigenvalue vectors.
pub fn simultaneous_eigenspaces(
    family: &[Mat<GaussRat>],
    within: &Subspace<GaussRat>,
) -> Result<Vec<JointEigenspace>> {
    let restricted: Vec<Mat<GaussRat>> = family
        .iter()
        .map(|a| within.restrict(a))
        .collect::<Result<_>>()?;
    for (i, a) in restricted.iter().enumerate() {
        for b in &restricted[i + 1..] {
            if !a.commutator(b).is_zero() {
                return Err(Error::NotCommuting);
            }
        }
    }

    let k = within.dim();
    // blocks in coordinates relative to the basis of `within`
    let mut blocks: Vec<(Vec<GaussRat>, Subspace<GaussRat>)> = vec![(Vec::new(), Subspace::full(k))];
    for r in &restricted {
        let mut next = Vec::new();
        for (vals, block) in blocks {
            for (lambda, space) in eigenspaces_in(r, &block)? {
                let mut v = vals.clone();
                v.push(lambda);
                next.push((v, space));
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| {
        a.0.iter()
            .zip(&b.0)
            .map(|(x, y)| x.cmp_lex(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    Ok(blocks
        .into_iter()
        .map(|(vals, coords)| {
            let vecs: Vec<Vec<GaussRat>> = coords
                .vectors()
                .iter()
                .map(|c| within.combine(c))
                .collect();
            (vals, Subspace::span(within.ambient_dim(), &vecs))
        })
        .collect())
}

/// Eigenspaces of `op` inside the invariant subspace `block` (both in the same
/// coordinates). Errors unless `op` is diagonalizable there over ℚ(i).
fn eigenspaces_in(
    op: &Mat<GaussRat>,
    block: &Subspace<GaussRat>,
) -> Result<Vec<(GaussRat, Subspace<GaussRat>)>> {
    let local = block.restrict(op)?;
    let poly = char_poly(&local);
    if local.rows() == 0 {
        return Ok(Vec::new());
    }
    let roots = gauss_rational_roots(&poly);
    if !roots.full_degree {
        return Err(Error::EigenvalueOutsideField(poly.to_string()));
    }
    let n = local.rows();
    let mut out = Vec::new();
    let mut total = 0;
    for (lambda, _) in roots.roots {
        let shifted = local.sub(&Mat::identity(n).scale(&lambda));
        let ns = shifted.nullspace();
        total += ns.dim();
        let vecs: Vec<Vec<GaussRat>> = ns.vectors().iter().map(|c| block.combine(c)).collect();
        out.push((lambda, Subspace::span(block.ambient_dim(), &vecs)));
    }
    if total != n {
        return Err(Error::NotSemisimple);
    }
    Ok(out)
}
