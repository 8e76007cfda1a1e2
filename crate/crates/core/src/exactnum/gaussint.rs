//! Gaussian integers over `BigInt`: norms, trial-division factoring and
//! divisor enumeration, plus sums of two squares.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{GaussRat, Rat};

/// Trial division bound. Cofactors left above it are accepted only if they are
/// provably prime (smaller than the square of the bound) or a perfect square of
/// such a prime.
const TRIAL_LIMIT: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        GaussInt::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn one() -> Self {
        GaussInt::from_ints(1, 0)
    }

    #[cfg(test)]
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&d.conj());
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussInt::new(qr, qi))
    }

    pub fn to_gauss_rat(&self) -> GaussRat {
        GaussRat::new(
            Rat::from_integer(self.re.clone()),
            Rat::from_integer(self.im.clone()),
        )
    }
}

/// Prime factorisation of `|n|` (n ≠ 0). `None` if a cofactor cannot be
/// certified within the trial-division bound.
pub fn factor_integer(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    assert!(!n.is_zero(), "factoring zero");
    let m = n.abs();
    if let Some(small) = m.to_u128() {
        return factor_u128(small)
            .map(|f| f.into_iter().map(|(p, e)| (BigInt::from(p), e)).collect());
    }
    let mut m = m;
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > m {
            break;
        }
        let mut e = 0;
        while (&m % d).is_zero() {
            m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
        if let Some(small) = m.to_u128() {
            for (p, e) in factor_u128(small)? {
                out.push((BigInt::from(p), e));
            }
            return Some(out);
        }
    }
    finish_cofactor(m, out)
}

fn factor_u128(mut m: u128) -> Option<Vec<(u128, u32)>> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d <= TRIAL_LIMIT as u128 && d * d <= m {
        let mut e = 0;
        while m.is_multiple_of(d) {
            m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let big: Vec<(BigInt, u32)> = out.into_iter().map(|(p, e)| (BigInt::from(p), e)).collect();
    let res = finish_cofactor(BigInt::from(m), big)?;
    Some(
        res.into_iter()
            .map(|(p, e)| (p.to_u128().expect("fits"), e))
            .collect(),
    )
}

/// Accepts the cofactor left after trial division when it is provably prime
/// or the square of such a prime.
fn finish_cofactor(m: BigInt, mut out: Vec<(BigInt, u32)>) -> Option<Vec<(BigInt, u32)>> {
    if m.is_one() {
        return Some(out);
    }
    let lim = BigInt::from(TRIAL_LIMIT);
    if m <= &lim * &lim {
        out.push((m, 1));
        return Some(out);
    }
    let s = m.sqrt();
    if &s * &s == m && s <= &lim * &lim {
        out.push((s, 2));
        return Some(out);
    }
    None
}

/// `(x, y)` with `x² + y² = p` for a prime `p ≡ 1 (mod 4)`.
fn prime_two_squares(p: &BigInt) -> (BigInt, BigInt) {
    let mut a = BigInt::one();
    loop {
        let rest = p - &a * &a;
        assert!(rest.is_positive(), "{p} is not a sum of two squares");
        let b = rest.sqrt();
        if &b * &b == rest {
            return (a, b);
        }
        a += 1;
    }
}

/// Factorisation of a nonzero Gaussian integer into Gaussian primes (up to a
/// unit). `None` when the norm cannot be factored.
pub fn gaussian_factor(z: &GaussInt) -> Option<Vec<(GaussInt, u32)>> {
    let mut rest = z.clone();
    let mut out = Vec::new();
    for (p, _) in factor_integer(&z.norm())? {
        let four = BigInt::from(4);
        let candidates: Vec<GaussInt> = if p == BigInt::from(2) {
            vec![GaussInt::from_ints(1, 1)]
        } else if (&p % &four) == BigInt::from(3) {
            vec![GaussInt::new(p.clone(), BigInt::zero())]
        } else {
            let (x, y) = prime_two_squares(&p);
            vec![GaussInt::new(x.clone(), y.clone()), GaussInt::new(x, -y)]
        };
        for pi in candidates {
            let mut e = 0;
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    debug_assert!(rest.norm().is_one());
    Some(out)
}

/// All divisors of `z` up to units (one representative per associate class).
pub fn gaussian_divisors(z: &GaussInt) -> Option<Vec<GaussInt>> {
    let mut divs = vec![GaussInt::one()];
    for (pi, e) in gaussian_factor(z)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = cur.mul(&pi);
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    Some(divs)
}

/// `(x, y)` with `x² + y² = n` for a nonnegative integer, if one exists.
pub fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::zero()));
    }
    let mut acc = GaussInt::one();
    for (p, e) in factor_integer(n)? {
        let r = (&p % 4u32).to_u32().unwrap();
        if r == 3 {
            if e % 2 == 1 {
                return None;
            }
            for _ in 0..e / 2 {
                acc = acc.mul(&GaussInt::new(p.clone(), BigInt::zero()));
            }
        } else {
            let pi = if r == 2 {
                GaussInt::from_ints(1, 1)
            } else {
                let (x, y) = prime_two_squares(&p);
                GaussInt::new(x, y)
            };
            for _ in 0..e {
                acc = acc.mul(&pi);
            }
        }
    }
    debug_assert_eq!(&acc.norm(), n);
    Some((acc.re.abs(), acc.im.abs()))
}

/// A Gaussian rational `c` with `|c|² = r`, if one exists. Real `c` is
/// preferred when `r` is a rational square.
pub fn rational_with_norm(r: &Rat) -> Option<GaussRat> {
    if r.is_negative() {
        return None;
    }
    // r = p/q = (p q) / q²
    let pq = r.numer() * r.denom();
    let q = Rat::from_integer(r.denom().clone());
    let s = pq.sqrt();
    if &s * &s == pq {
        return Some(GaussRat::real(Rat::from_integer(s) / q));
    }
    let (x, y) = two_squares(&pq)?;
    Some(GaussRat::new(
        Rat::from_integer(x) / &q,
        Rat::from_integer(y) / &q,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factors_small_integers() {
        let f = factor_integer(&bi(360)).unwrap();
        assert_eq!(f, vec![(bi(2), 3), (bi(3), 2), (bi(5), 1)]);
        assert_eq!(factor_integer(&bi(-7)).unwrap(), vec![(bi(7), 1)]);
        assert!(factor_integer(&bi(1)).unwrap().is_empty());
    }

    #[test]
    fn divisors_of_five() {
        // 5 = (2+i)(2-i): divisors 1, 2+i, 2-i, 5 up to units
        let d = gaussian_divisors(&GaussInt::from_ints(5, 0)).unwrap();
        assert_eq!(d.len(), 4);
        for x in &d {
            assert!(GaussInt::from_ints(5, 0).div_exact(x).is_some());
        }
    }

    #[test]
    fn sums_of_two_squares() {
        assert_eq!(two_squares(&bi(3)), None);
        assert_eq!(two_squares(&bi(21)), None);
        let (x, y) = two_squares(&bi(65)).unwrap();
        assert_eq!(&x * &x + &y * &y, bi(65));
        let (x, y) = two_squares(&bi(18)).unwrap();
        assert_eq!(&x * &x + &y * &y, bi(18));
    }

    #[test]
    fn norm_preimages() {
        assert_eq!(rational_with_norm(&ratio(4, 9)), Some(GaussRat::real(ratio(2, 3))));
        let c = rational_with_norm(&ratio(1, 2)).unwrap();
        assert_eq!(c.norm(), ratio(1, 2));
        assert_eq!(rational_with_norm(&ratio(1, 3)), None);
        assert_eq!(rational_with_norm(&ratio(-1, 1)), None);
    }

    proptest! {
        #[test]
        fn divisors_divide(a in -30i64..30, b in -30i64..30) {
            let z = GaussInt::from_ints(a, b);
            prop_assume!(!z.is_zero());
            for d in gaussian_divisors(&z).unwrap() {
                prop_assert!(z.div_exact(&d).is_some());
            }
        }

        #[test]
        fn norm_preimage_is_exact(n in 1i64..400, d in 1i64..50) {
            let r = ratio(n, d);
            if let Some(c) = rational_with_norm(&r) {
                prop_assert_eq!(c.norm(), r);
                prop_assert!(c.re >= Rat::zero() && c.im >= Rat::zero());
            }
            // a sum of two rational squares is detected
            let c = GaussRat::new(ratio(n, d), ratio(d, n + 1));
            prop_assert!(rational_with_norm(&c.norm()).is_some());
        }
    }
}
