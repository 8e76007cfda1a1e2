use super::{find_root, neg_values, CartanSubalgebra, LieAlgebra, Root};
use crate::exactnum::{rational_with_norm, Field, GaussRat};
use crate::linalg::{conj_vec, dot, scale_vec, to_gauss_vec, Mat};
use crate::{Error, Result};

/// A normalized triple `[X, Y] = H`, `[H, X] = 2X`, `[H, Y] = -2Y` in `g^C`.
/// `x`, `y`, `h` are algebra-basis coordinates; `h_cartan` are the
/// coordinates of `H` in the Cartan basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub root: Vec<GaussRat>,
    pub x: Vec<GaussRat>,
    pub y: Vec<GaussRat>,
    pub h: Vec<GaussRat>,
    pub h_cartan: Vec<GaussRat>,
}

impl Sl2Triple {
    /// `β(H_α)` for a root given by its values.
    pub fn pairing(&self, beta: &[GaussRat]) -> GaussRat {
        dot(&self.h_cartan, beta)
    }

    /// Re-checks the three bracket relations.
    pub fn check(&self, g: &LieAlgebra) -> bool {
        let two = GaussRat::int(2);
        g.bracket_coords(&self.x, &self.y) == self.h
            && g.bracket_coords(&self.h, &self.x) == scale_vec(&self.x, &two)
            && g.bracket_coords(&self.h, &self.y) == scale_vec(&self.y, &-two)
    }
}

/// Coordinates of `z ∈ c^C` in the Cartan basis.
pub fn cartan_coords(c: &CartanSubalgebra, z: &[GaussRat]) -> Option<Vec<GaussRat>> {
    let cols: Vec<Vec<GaussRat>> = c.elements().iter().map(|h| to_gauss_vec(h)).collect();
    Mat::from_rows(z.len(), cols).ok()?.transpose().solve(z)
}

/// Scales so that the last nonzero coordinate is 1.
fn normalize_last(v: Vec<GaussRat>) -> Vec<GaussRat> {
    match v.iter().rev().find(|x| !x.is_zero()) {
        Some(last) => {
            let k = last.inv().expect("nonzero");
            scale_vec(&v, &k)
        }
        None => v,
    }
}

/// The sl₂-triple of the root `roots[idx]`.
///
/// `X` spans the root space with last nonzero coordinate 1. When `α` is of
/// compact type (`ᾱ = -α`) and the norm equation allows it, `X` is rescaled so
/// that `Y = -X̄`; otherwise `Y` is the scaled spanning vector of `g_{-α}`.
pub fn sl2_triple(
    g: &LieAlgebra,
    c: &CartanSubalgebra,
    roots: &[Root],
    idx: usize,
) -> Result<Sl2Triple> {
    let alpha = &roots[idx];
    let name = || format!("{:?}", alpha.values.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    let neg = find_root(roots, &neg_values(&alpha.values))
        .ok_or_else(|| Error::NotCartan(format!("no negative of root {}", name())))?;
    if alpha.space.dim() != 1 || roots[neg].space.dim() != 1 {
        return Err(Error::NotSemisimpleAlgebra);
    }
    let eval = |z: &[GaussRat]| -> Result<GaussRat> {
        let cc = cartan_coords(c, z)
            .ok_or_else(|| Error::NotCartan("bracket of root vectors leaves the Cartan".into()))?;
        Ok(dot(&cc, &alpha.values))
    };
    let x0 = normalize_last(alpha.space.vectors().remove(0));
    let y0 = normalize_last(roots[neg].space.vectors().remove(0));

    let compact = alpha.values.iter().map(Field::conj).collect::<Vec<_>>() == roots[neg].values;
    let mut pair = None;
    if compact {
        let s = eval(&g.bracket_coords(&x0, &conj_vec(&x0)))?;
        if let Some(r) = s.to_rat().filter(|r| *r < Field::zero()) {
            let target = -crate::exactnum::rat(2) / r;
            if let Some(k) = rational_with_norm(&target) {
                let x = scale_vec(&x0, &k);
                let y: Vec<GaussRat> = conj_vec(&x).into_iter().map(|v| -v).collect();
                pair = Some((x, y));
            }
        }
    }
    let (x, y) = match pair {
        Some(p) => p,
        None => {
            let s = eval(&g.bracket_coords(&x0, &y0))?;
            if s.is_zero() {
                return Err(Error::DegenerateRoot(name()));
            }
            let k = GaussRat::int(2).div(&s);
            (x0, scale_vec(&y0, &k))
        }
    };
    let h = g.bracket_coords(&x, &y);
    let h_cartan = cartan_coords(c, &h).expect("checked above");
    let t = Sl2Triple {
        root: alpha.values.clone(),
        x,
        y,
        h,
        h_cartan,
    };
    if !t.check(g) {
        return Err(Error::DegenerateRoot(name()));
    }
    Ok(t)
}

/// `w_α(β) = β - β(H_α) α`.
pub fn reflect_root(beta: &[GaussRat], alpha: &Sl2Triple) -> Vec<GaussRat> {
    let k = alpha.pairing(beta);
    beta.iter()
        .zip(&alpha.root)
        .map(|(b, a)| b.clone() - k.clone() * a)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{positive_system, root_decomposition};
    use crate::repzoo::{cartan_from_indices, so_pq, sl_cartan, sl_n};

    fn triples(g: &LieAlgebra, c: &CartanSubalgebra) -> Vec<Sl2Triple> {
        let roots = root_decomposition(g, c).unwrap();
        (0..roots.len()).map(|i| sl2_triple(g, c, &roots, i).unwrap()).collect()
    }

    #[test]
    fn so3_compact_normalization() {
        let g = so_pq(3, 0).unwrap();
        let c = cartan_from_indices(&g, &[0]).unwrap();
        let roots = root_decomposition(&g, &c).unwrap();
        let (pos, _) = positive_system(&roots);
        assert_eq!(pos.len(), 1);
        assert_eq!(pos[0].values, vec![GaussRat::i()]);
        let idx = find_root(&roots, &pos[0].values).unwrap();
        let t = sl2_triple(&g, &c, &roots, idx).unwrap();
        assert!(t.check(&g));
        let minus_conj: Vec<GaussRat> = conj_vec(&t.x).into_iter().map(|v| -v).collect();
        assert_eq!(t.y, minus_conj);
        assert_eq!(t.pairing(&t.root), GaussRat::int(2));
        // X has no component along the Cartan element and last coordinate 1
        assert!(t.x[0].is_zero());
        assert!(t.x[2].is_one());
    }

    #[test]
    fn every_root_has_a_triple() {
        let g = sl_n(3).unwrap();
        let c = sl_cartan(&g, 3, false).unwrap();
        for t in triples(&g, &c) {
            assert!(t.check(&g));
            assert_eq!(t.pairing(&t.root), GaussRat::int(2));
        }
        let g = so_pq(1, 3).unwrap();
        let c = cartan_from_indices(&g, &[0, 5]).unwrap();
        for t in triples(&g, &c) {
            assert!(t.check(&g));
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let g = sl_n(3).unwrap();
        let c = sl_cartan(&g, 3, false).unwrap();
        let ts = triples(&g, &c);
        for a in &ts {
            assert_eq!(reflect_root(&a.root, a), neg_values(&a.root));
            for b in &ts {
                let r = reflect_root(&b.root, a);
                assert_eq!(reflect_root(&r, a), b.root);
                assert!(ts.iter().any(|t| t.root == r));
            }
        }
    }
}
