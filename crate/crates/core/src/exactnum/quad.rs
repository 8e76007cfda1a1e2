use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gaussint::factor_integer;
use super::{ComplexField, Field, GaussRat, Rat, ScalarParseError};
use crate::Error;

/// Exact square root of a positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqrtExact {
    Rational(Rat),
    /// `√r = coeff·√disc` with `disc > 1` a square-free integer.
    Extension { coeff: Rat, disc: Rat },
}

/// Square-free decomposition `n = k²·s` of a positive integer.
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    let facs = factor_integer(n).expect("integer too large to factor");
    let mut k = BigInt::one();
    let mut s = BigInt::one();
    for (p, e) in facs {
        for _ in 0..e / 2 {
            k *= &p;
        }
        if e % 2 == 1 {
            s *= &p;
        }
    }
    (k, s)
}

pub fn sqrt_exact(r: &Rat) -> Result<SqrtExact, Error> {
    if !r.is_positive() {
        return Err(Error::NonPositive(r.to_string()));
    }
    // √(p/q) = √(pq)/q
    let pq = r.numer() * r.denom();
    let q = Rat::from_integer(r.denom().clone());
    let (k, s) = square_free_split(&pq);
    let coeff = Rat::from_integer(k) / q;
    if s.is_one() {
        Ok(SqrtExact::Rational(coeff))
    } else {
        Ok(SqrtExact::Extension {
            coeff,
            disc: Rat::from_integer(s),
        })
    }
}

/// `u + v·√disc` with `u, v ∈ ℚ(i)` and `disc > 1` square-free.
///
/// When `v = 0` the value lies in `ℚ(i)` and `disc` is stored as `0`, so
/// equality stays structural. Arithmetic between values over two different
/// nontrivial `disc` panics: a computation lives in a single extension.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadExt {
    u: GaussRat,
    v: GaussRat,
    disc: Rat,
}

impl QuadExt {
    /// Builds `u + v·√d` for any positive rational `d`, reducing `d` to its
    /// square-free part first.
    pub fn new(u: GaussRat, v: GaussRat, d: &Rat) -> Result<Self, Error> {
        match sqrt_exact(d)? {
            SqrtExact::Rational(c) => Ok(Self::from_gauss_rat(u + v * &GaussRat::real(c))),
            SqrtExact::Extension { coeff, disc } => {
                Ok(Self::raw(u, v * &GaussRat::real(coeff), disc))
            }
        }
    }

    fn raw(u: GaussRat, v: GaussRat, disc: Rat) -> Self {
        if v.re.is_zero() && v.im.is_zero() {
            QuadExt {
                u,
                v,
                disc: <Rat as Field>::zero(),
            }
        } else {
            QuadExt { u, v, disc }
        }
    }

    pub fn from_gauss_rat(u: GaussRat) -> Self {
        QuadExt {
            u,
            v: GaussRat::default(),
            disc: <Rat as Field>::zero(),
        }
    }

    /// `√d` itself.
    pub fn sqrt(d: &Rat) -> Result<Self, Error> {
        Self::new(GaussRat::default(), GaussRat::int(1), d)
    }

    pub fn u(&self) -> &GaussRat {
        &self.u
    }

    pub fn v(&self) -> &GaussRat {
        &self.v
    }

    /// The square-free radicand, or `0` when the value lies in `ℚ(i)`.
    pub fn disc(&self) -> &Rat {
        &self.disc
    }

    pub fn as_gauss_rat(&self) -> Option<&GaussRat> {
        self.disc.is_zero().then_some(&self.u)
    }

    fn common_disc(&self, o: &Self) -> Rat {
        match (self.disc.is_zero(), o.disc.is_zero()) {
            (true, _) => o.disc.clone(),
            (_, true) => self.disc.clone(),
            _ => {
                assert_eq!(self.disc, o.disc, "mixed quadratic extensions");
                self.disc.clone()
            }
        }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::default()
    }
    fn one() -> Self {
        QuadExt::from_gauss_rat(GaussRat::int(1))
    }
    fn is_zero(&self) -> bool {
        Field::is_zero(&self.u) && Field::is_zero(&self.v)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        // (u + v√d)⁻¹ = (u - v√d) / (u² - v²d); the denominator is nonzero
        // because √d ∉ ℚ(i)
        let d = GaussRat::real(self.disc.clone());
        let den = &self.u * &self.u - &(&self.v * &self.v) * &d;
        let k = den.inv()?;
        Some(QuadExt::raw(
            &self.u * &k,
            -(&self.v * &k),
            self.disc.clone(),
        ))
    }
    fn from_rat(r: &Rat) -> Self {
        QuadExt::from_gauss_rat(GaussRat::real(r.clone()))
    }
    fn conj(&self) -> Self {
        QuadExt::raw(self.u.conj(), self.v.conj(), self.disc.clone())
    }
    fn re_part(&self) -> Self {
        QuadExt::raw(self.u.re_part(), self.v.re_part(), self.disc.clone())
    }
    fn im_part(&self) -> Self {
        QuadExt::raw(self.u.im_part(), self.v.im_part(), self.disc.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        self.as_gauss_rat()?.as_real().cloned()
    }
    fn parse_text(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl ComplexField for QuadExt {
    fn from_gauss(z: &GaussRat) -> Self {
        QuadExt::from_gauss_rat(z.clone())
    }
}

impl From<GaussRat> for QuadExt {
    fn from(z: GaussRat) -> Self {
        QuadExt::from_gauss_rat(z)
    }
}

fn add_q(a: &QuadExt, b: &QuadExt) -> QuadExt {
    let d = a.common_disc(b);
    QuadExt::raw(&a.u + &b.u, &a.v + &b.v, d)
}

fn sub_q(a: &QuadExt, b: &QuadExt) -> QuadExt {
    let d = a.common_disc(b);
    QuadExt::raw(&a.u - &b.u, &a.v - &b.v, d)
}

fn mul_q(a: &QuadExt, b: &QuadExt) -> QuadExt {
    let d = a.common_disc(b);
    let dg = GaussRat::real(d.clone());
    let u = &a.u * &b.u + &(&a.v * &b.v) * &dg;
    let v = &a.u * &b.v + &a.v * &b.u;
    QuadExt::raw(u, v, d)
}

macro_rules! quad_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &'a QuadExt) -> QuadExt {
                $f(self, o)
            }
        }
        impl<'a> $tr<&'a QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: &'a QuadExt) -> QuadExt {
                $f(&self, o)
            }
        }
        impl $tr<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $m(self, o: QuadExt) -> QuadExt {
                $f(&self, &o)
            }
        }
    };
}

quad_binop!(Add, add, add_q);
quad_binop!(Sub, sub, sub_q);
quad_binop!(Mul, mul, mul_q);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::raw(-self.u, -self.v, self.disc)
    }
}

/// `u` alone, or `u+(v)*sqrt(d)`.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disc.is_zero() {
            write!(f, "{}", self.u)
        } else {
            write!(f, "{}+({})*sqrt({})", self.u, self.v, self.disc)
        }
    }
}

impl FromStr for QuadExt {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarParseError(s.to_string());
        let t = s.trim();
        let Some(mid) = t.find(")*sqrt(") else {
            return t.parse::<GaussRat>().map(QuadExt::from_gauss_rat);
        };
        let open = t[..mid].rfind("+(").ok_or_else(err)?;
        let u: GaussRat = t[..open].parse()?;
        let v: GaussRat = t[open + 2..mid].parse()?;
        let d_txt = t[mid + 7..].strip_suffix(')').ok_or_else(err)?;
        let d = super::parse_rat(d_txt).ok_or_else(err)?;
        QuadExt::new(u, v, &d).map_err(|_| err())
    }
}

impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadExt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn sqrt_cases() {
        assert_eq!(sqrt_exact(&ratio(9, 4)).unwrap(), SqrtExact::Rational(ratio(3, 2)));
        assert_eq!(
            sqrt_exact(&rat(8)).unwrap(),
            SqrtExact::Extension { coeff: rat(2), disc: rat(2) }
        );
        assert_eq!(
            sqrt_exact(&ratio(1, 2)).unwrap(),
            SqrtExact::Extension { coeff: ratio(1, 2), disc: rat(2) }
        );
        assert!(matches!(sqrt_exact(&rat(0)), Err(Error::NonPositive(_))));
        assert!(matches!(sqrt_exact(&rat(-3)), Err(Error::NonPositive(_))));
    }

    #[test]
    fn sqrt_squares_back() {
        let r2 = QuadExt::sqrt(&rat(2)).unwrap();
        assert_eq!(&r2 * &r2, QuadExt::from_int(2));
        assert_eq!(r2.disc(), &rat(2));
        let r4 = QuadExt::sqrt(&rat(4)).unwrap();
        assert_eq!(r4, QuadExt::from_int(2));
        assert_eq!(r4.disc(), &rat(0));
        let r12 = QuadExt::sqrt(&ratio(12, 1)).unwrap();
        assert_eq!(r12.v(), &GaussRat::int(2));
    }

    #[test]
    fn cancellation_drops_the_radical() {
        let r3 = QuadExt::sqrt(&rat(3)).unwrap();
        let x = &r3 - &r3;
        assert_eq!(x, QuadExt::zero());
        assert_eq!(x.disc(), &rat(0));
    }

    #[test]
    #[should_panic(expected = "mixed quadratic extensions")]
    fn mixed_extensions_panic() {
        let _ = QuadExt::sqrt(&rat(2)).unwrap() + QuadExt::sqrt(&rat(3)).unwrap();
    }

    #[test]
    fn text_forms() {
        let x = QuadExt::new(GaussRat::ints(1, -1), GaussRat::new(ratio(1, 2), rat(0)), &rat(5))
            .unwrap();
        assert_eq!(x.to_string(), "1-1i+(1/2)*sqrt(5)");
        assert_eq!(x.to_string().parse::<QuadExt>().unwrap(), x);
        assert_eq!("2+i".parse::<QuadExt>().unwrap(), QuadExt::from(GaussRat::ints(2, 1)));
        assert!("1+(2)*sqrt(-1)".parse::<QuadExt>().is_err());
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRat> {
        (-9i64..9, 1i64..5, -9i64..9, 1i64..5)
            .prop_map(|(a, b, c, d)| GaussRat::new(ratio(a, b), ratio(c, d)))
    }

    fn arb_quad() -> impl Strategy<Value = QuadExt> {
        (arb_gauss(), arb_gauss()).prop_map(|(u, v)| QuadExt::new(u, v, &rat(7)).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_quad(), b in arb_quad(), c in arb_quad()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !Field::is_zero(&a) {
                prop_assert_eq!(&a * &a.inv().unwrap(), QuadExt::one());
            }
        }

        #[test]
        fn conj_is_involution(a in arb_quad(), b in arb_quad()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            let i = QuadExt::i();
            prop_assert_eq!(a.re_part() + i * &a.im_part(), a.clone());
        }

        #[test]
        fn agrees_with_gauss_when_rational(a in arb_gauss(), b in arb_gauss()) {
            let (qa, qb) = (QuadExt::from(a.clone()), QuadExt::from(b.clone()));
            prop_assert_eq!(&qa + &qb, QuadExt::from(&a + &b));
            prop_assert_eq!(&qa * &qb, QuadExt::from(&a * &b));
            prop_assert_eq!(&qa - &qb, QuadExt::from(&a - &b));
            if !Field::is_zero(&a) {
                prop_assert_eq!(qa.inv().unwrap(), QuadExt::from(a.inv().unwrap()));
            }
        }

        #[test]
        fn text_round_trip(a in arb_quad()) {
            prop_assert_eq!(a.to_string().parse::<QuadExt>().unwrap(), a);
        }
    }
}
