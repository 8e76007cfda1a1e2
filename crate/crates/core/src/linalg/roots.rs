use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::Poly;
use crate::exactnum::gaussint::{gaussian_divisors, GaussInt};
use crate::exactnum::{Field, GaussRat, Rat};

/// Roots of a polynomial lying in ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    /// Distinct roots with multiplicities, sorted lexicographically by `(re, im)`.
    pub roots: Vec<(GaussRat, usize)>,
    /// Whether the multiplicities add up to the degree, i.e. the polynomial
    /// splits over ℚ(i). Also false when a coefficient was too large to factor.
    pub full_degree: bool,
}

/// Finds every root in ℚ(i) by the rational root test over the Gaussian
/// integers: after clearing denominators each root is `u·a/b` with `a` dividing
/// the constant term, `b` dividing the leading term and `u` a unit.
pub fn gauss_rational_roots(p: &Poly<GaussRat>) -> RootSet {
    let deg = p.degree().expect("roots of the zero polynomial");
    let mut found: Vec<(GaussRat, usize)> = Vec::new();

    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let q = Poly::new(p.coeffs()[zeros..].to_vec());
    if zeros > 0 {
        found.push((GaussRat::default(), zeros));
    }

    // the square-free part has the same roots, each once
    let sf = q.div_rem(&q.gcd(&q.derivative())).0;
    let mut sf = sf;
    let mut complete = true;
    // each pass finds one root and deflates, keeping the constant term small
    while sf.degree().unwrap_or(0) > 0 {
        match find_one_root(&sf) {
            Some(Some(r)) => {
                found.push((r.clone(), multiplicity(&q, &r)));
                sf = sf.div_rem(&Poly::linear_root(&r)).0;
            }
            Some(None) => break,
            None => {
                complete = false;
                break;
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp_lex(&b.0));
    let total: usize = found.iter().map(|(_, m)| m).sum();
    RootSet {
        roots: found,
        full_degree: complete && total == deg,
    }
}

/// Some root of `p` in ℚ(i), `Some(None)` if there is none, `None` if the
/// coefficients could not be factored.
fn find_one_root(p: &Poly<GaussRat>) -> Option<Option<GaussRat>> {
    if p.degree() == Some(1) {
        let c = p.coeffs();
        return Some(Some(-c[0].div(&c[1])));
    }
    let ints = clear_denominators(p);
    let num_divs = gaussian_divisors(&ints[0])?;
    let den_divs = gaussian_divisors(ints.last().expect("nonzero"))?;
    let mut seen = BTreeSet::new();
    for a in &num_divs {
        for b in &den_divs {
            let frac = a.to_gauss_rat().div(&b.to_gauss_rat());
            for unit in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
                let r = &frac * &GaussRat::ints(unit.0, unit.1);
                if seen.insert(r.clone()) && p.eval(&r).is_zero() {
                    return Some(Some(r));
                }
            }
        }
    }
    Some(None)
}

fn multiplicity(p: &Poly<GaussRat>, r: &GaussRat) -> usize {
    let lin = Poly::linear_root(r);
    let mut cur = p.clone();
    let mut m = 0;
    loop {
        let (q, rem) = cur.div_rem(&lin);
        if !rem.is_zero() {
            return m;
        }
        m += 1;
        cur = q;
    }
}

/// Coefficients scaled by the lcm of all denominators.
fn clear_denominators(p: &Poly<GaussRat>) -> Vec<GaussInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |l, c| {
        l.lcm(c.re.denom()).lcm(c.im.denom())
    });
    let lr = Rat::from_integer(l);
    p.coeffs()
        .iter()
        .map(|c| {
            let re = (&c.re * &lr).to_integer();
            let im = (&c.im * &lr).to_integer();
            GaussInt::new(re, im)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    fn gp(c: &[(i64, i64)]) -> Poly<GaussRat> {
        Poly::new(c.iter().map(|&(a, b)| GaussRat::ints(a, b)).collect())
    }

    #[test]
    fn t_squared_plus_one() {
        let r = gauss_rational_roots(&gp(&[(1, 0), (0, 0), (1, 0)]));
        assert!(r.full_degree);
        assert_eq!(r.roots, vec![(GaussRat::ints(0, -1), 1), (GaussRat::ints(0, 1), 1)]);
    }

    #[test]
    fn t_squared_minus_two() {
        let r = gauss_rational_roots(&gp(&[(-2, 0), (0, 0), (1, 0)]));
        assert!(!r.full_degree);
        assert!(r.roots.is_empty());
    }

    #[test]
    fn repeated_and_zero_roots() {
        // t^2 (t - 1/2)^3 (t + i)
        let mut p = Poly::new(vec![GaussRat::default(), GaussRat::default(), GaussRat::int(1)]);
        for _ in 0..3 {
            p = p.mul(&Poly::linear_root(&GaussRat::real(ratio(1, 2))));
        }
        p = p.mul(&Poly::linear_root(&GaussRat::ints(0, -1)));
        let r = gauss_rational_roots(&p);
        assert!(r.full_degree);
        assert_eq!(
            r.roots,
            vec![
                (GaussRat::ints(0, -1), 1),
                (GaussRat::default(), 2),
                (GaussRat::real(ratio(1, 2)), 3)
            ]
        );
    }

    fn arb_root() -> impl Strategy<Value = GaussRat> {
        (-6i64..7, 1i64..4, -6i64..7, 1i64..4)
            .prop_map(|(a, b, c, d)| GaussRat::new(ratio(a, b), ratio(c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn recovers_planted_roots(rs in proptest::collection::vec(arb_root(), 1..6)) {
            let mut p = Poly::constant(GaussRat::int(3));
            for r in &rs {
                p = p.mul(&Poly::linear_root(r));
            }
            let got = gauss_rational_roots(&p);
            prop_assert!(got.full_degree);
            let mut expanded: Vec<GaussRat> = got
                .roots
                .iter()
                .flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m))
                .collect();
            let mut want = rs.clone();
            want.sort();
            expanded.sort();
            prop_assert_eq!(expanded, want);
        }
    }
}
