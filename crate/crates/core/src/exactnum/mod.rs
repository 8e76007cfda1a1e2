//! Exact scalars: rationals, Gaussian rationals `a + b·i`, and the quadratic
//! layer `u + v·√d` over them.
//!
//! Every value is kept in canonical reduced form, so `==` is structural
//! equality and can be used directly for pivoting and subspace comparison.

mod gauss;
pub(crate) mod gaussint;
mod quad;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use gauss::{is_positive_complex, GaussRat};
pub use gaussint::rational_with_norm;
pub use quad::{sqrt_exact, QuadExt, SqrtExact};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// The operations the linear-algebra layer needs from a scalar.
///
/// `conj`, `re_part` and `im_part` refer to the complex structure: for real
/// scalars conjugation is the identity and the imaginary part is zero.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rat(r: &Rat) -> Self;
    fn conj(&self) -> Self;
    /// Real part, as an element of the same field.
    fn re_part(&self) -> Self;
    /// Imaginary part, as an element of the same field.
    fn im_part(&self) -> Self;
    /// The value as a plain rational, if it is one.
    fn to_rat(&self) -> Option<Rat>;
    /// Inverse of `Display`.
    fn parse_text(s: &str) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&rat(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn is_real(&self) -> bool {
        self.im_part().is_zero()
    }

    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self {
        self.clone() * &other.inv().expect("division by zero")
    }
}

/// Scalars that contain `i`.
pub trait ComplexField: Field {
    fn from_gauss(z: &GaussRat) -> Self;
    fn i() -> Self {
        Self::from_gauss(&GaussRat::i())
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn re_part(&self) -> Self {
        self.clone()
    }
    fn im_part(&self) -> Self {
        Zero::zero()
    }
    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn parse_text(s: &str) -> Option<Self> {
        parse_rat(s)
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the text form `a` or `a/b`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() || s.contains(char::is_whitespace) {
        return None;
    }
    let r: Rat = s.parse().ok()?;
    if r.denom().is_negative() {
        return None;
    }
    Some(r)
}

/// Error returned when a scalar's text form cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed scalar {0:?}")]
pub struct ScalarParseError(pub String);
