use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rat, ComplexField, Field, Rat, ScalarParseError};

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat {
            re,
            im: <Rat as Field>::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::real(super::rat(n))
    }

    /// `a + b·i` with integer parts.
    pub fn ints(a: i64, b: i64) -> Self {
        GaussRat::new(super::rat(a), super::rat(b))
    }

    pub fn i() -> Self {
        GaussRat::ints(0, 1)
    }

    /// `|z|² = re² + im²`.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Positive in the order `re > 0`, or `re = 0` and `im > 0`.
    pub fn is_positive(&self) -> bool {
        is_positive_complex(self)
    }

    /// Real value if the imaginary part vanishes.
    pub fn as_real(&self) -> Option<&Rat> {
        if self.im.is_zero() {
            Some(&self.re)
        } else {
            None
        }
    }

    /// Lexicographic comparison on `(re, im)`.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

/// True iff `re(z) > 0`, or `re(z) = 0` and `im(z) > 0`. Zero is not positive.
pub fn is_positive_complex(z: &GaussRat) -> bool {
    z.re.is_positive() || (z.re.is_zero() && z.im.is_positive())
}

/// Lexicographic `(re, im)` order; a total order used for deterministic
/// sorting, not a field order.
impl Ord for GaussRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_lex(other)
    }
}

impl PartialOrd for GaussRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::default()
    }
    fn one() -> Self {
        GaussRat::int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(GaussRat::new(&self.re / &n, -(&self.im / &n)))
    }
    fn from_rat(r: &Rat) -> Self {
        GaussRat::real(r.clone())
    }
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }
    fn re_part(&self) -> Self {
        GaussRat::real(self.re.clone())
    }
    fn im_part(&self) -> Self {
        GaussRat::real(self.im.clone())
    }
    fn to_rat(&self) -> Option<Rat> {
        self.as_real().cloned()
    }
    fn parse_text(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl ComplexField for GaussRat {
    fn from_gauss(z: &GaussRat) -> Self {
        z.clone()
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

macro_rules! gauss_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussRat> for &'a GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'a GaussRat) -> GaussRat {
                let f: fn(&GaussRat, &GaussRat) -> GaussRat = $body;
                f(self, o)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: &'a GaussRat) -> GaussRat {
                (&self).$m(o)
            }
        }
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, o: GaussRat) -> GaussRat {
                (&self).$m(&o)
            }
        }
    };
}

gauss_binop!(Add, add, |a, b| GaussRat::new(&a.re + &b.re, &a.im + &b.im));
gauss_binop!(Sub, sub, |a, b| GaussRat::new(&a.re - &b.re, &a.im - &b.im));
gauss_binop!(Mul, mul, |a, b| GaussRat::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

/// Text form: `a/b`, `c/di`, or `a/b+c/di` (denominators of 1 omitted).
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl FromStr for GaussRat {
    type Err = ScalarParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ScalarParseError(s.to_string());
        let t = s.trim();
        if t.is_empty() || t.contains(char::is_whitespace) {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rat(t).map(GaussRat::real).ok_or_else(err);
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re_txt, im_txt) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let re = parse_rat(re_txt).ok_or_else(err)?;
        let im = match im_txt {
            "" | "+" => super::rat(1),
            "-" => super::rat(-1),
            other => parse_rat(other).ok_or_else(err)?,
        };
        Ok(GaussRat::new(re, im))
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::ints(a, b)
    }

    #[test]
    fn positivity_branches() {
        assert!(is_positive_complex(&g(1, 0)));
        assert!(is_positive_complex(&g(0, 1)));
        assert!(!is_positive_complex(&g(0, -1)));
        assert!(!is_positive_complex(&g(0, 0)));
        assert!(is_positive_complex(&g(1, -5)));
        assert!(!is_positive_complex(&g(-1, 5)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(g(2, 3).conj(), g(2, -3));
        assert_eq!(g(5, 0).conj(), g(5, 0));
    }

    #[test]
    fn text_round_trip_samples() {
        for (txt, val) in [
            ("3", g(3, 0)),
            ("-1/2", GaussRat::real(ratio(-1, 2))),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            ("2i", g(0, 2)),
            ("1/2+3/4i", GaussRat::new(ratio(1, 2), ratio(3, 4))),
            ("1-i", g(1, -1)),
            ("-1/3-2/5i", GaussRat::new(ratio(-1, 3), ratio(-2, 5))),
        ] {
            assert_eq!(txt.parse::<GaussRat>().unwrap(), val, "{txt}");
        }
        assert_eq!(g(0, -1).to_string(), "-1i");
        assert_eq!(GaussRat::new(ratio(1, 2), ratio(-3, 4)).to_string(), "1/2-3/4i");
        for bad in ["", "1 + i", "ii", "1/2/3", "x", "1+2"] {
            assert!(bad.parse::<GaussRat>().is_err(), "{bad}");
        }
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRat> {
        (arb_rat(), arb_rat()).prop_map(|(a, b)| GaussRat::new(a, b))
    }

    proptest! {
        #[test]
        fn conj_is_ring_involution(a in arb_gauss(), b in arb_gauss()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        }

        #[test]
        fn field_axioms(a in arb_gauss(), b in arb_gauss(), c in arb_gauss()) {
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            if !Field::is_zero(&a) {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussRat::one());
            }
        }

        #[test]
        fn positivity_is_a_total_order_on_nonzero(a in arb_gauss()) {
            if !Field::is_zero(&a) {
                prop_assert!(a.is_positive() ^ (-a.clone()).is_positive());
            }
        }

        #[test]
        fn text_round_trip(a in arb_gauss()) {
            prop_assert_eq!(a.to_string().parse::<GaussRat>().unwrap(), a);
        }
    }
}
