//! Exact rationals and the small numeric abstraction shared by exact and
//! approximate evaluation.
//!
//! Everything sign-critical runs on [`Rational`]. The `f64` implementation
//! exists for inputs that are irrational (for example `2^{-1/2}`), where
//! every sign decision is taken against a caller-supplied tolerance.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Build `num / den` as a [`Rational`].
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"`, `"p"`, or a terminating decimal such as `"0.125"`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(alloc::format!("malformed decimal `{s}`"));
        }
        let int_part = if digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(digits).map_err(|_| alloc::format!("malformed decimal `{s}`"))?
        };
        let frac_part =
            BigInt::from_str(frac).map_err(|_| alloc::format!("malformed decimal `{s}`"))?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = Rational::new(int_part * &scale + frac_part, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    if s.ends_with("/0") {
        return Err(alloc::format!("zero denominator in `{s}`"));
    }
    Rational::from_str(s).map_err(|_| alloc::format!("malformed rational `{s}`"))
}

/// Nearest `f64` to a rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Field elements the classification code is generic over.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Tolerance carried by sign decisions (`()` when exact).
    type Tol: Copy + Debug;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;

    /// Sign of `self`, treating magnitudes within `tol` as zero.
    fn sign(&self, tol: Self::Tol) -> Ordering;

    /// The exact value, when there is one.
    fn as_rational(&self) -> Option<&Rational>;

    fn is_positive_within(&self, tol: Self::Tol) -> bool {
        self.sign(tol) == Ordering::Greater
    }

    fn is_zero_within(&self, tol: Self::Tol) -> bool {
        self.sign(tol) == Ordering::Equal
    }
}

impl Scalar for Rational {
    type Tol = ();

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn sign(&self, _tol: ()) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn as_rational(&self) -> Option<&Rational> {
        Some(self)
    }
}

impl Scalar for f64 {
    type Tol = f64;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn sign(&self, tol: f64) -> Ordering {
        if *self > tol {
            Ordering::Greater
        } else if *self < -tol {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }

    fn as_rational(&self) -> Option<&Rational> {
        None
    }
}
