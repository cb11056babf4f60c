//! Coefficient rings.
//!
//! Every polynomial in this crate is generic over a [`Coefficient`] type. Four
//! realizations ship with the crate:
//!
//! | ring                 | type                  | arithmetic                 |
//! |----------------------|-----------------------|----------------------------|
//! | double               | `f64`                 | IEEE-754 round-to-nearest  |
//! | rational             | [`Rational`]          | exact, arbitrary precision |
//! | interval             | [`Interval`]          | outward rounded enclosures |
//! | complex              | `Complex<f64>`, `Complex<Rational>` | over the base ring |
//!
//! Coefficient literals from text (`"3/8"`, `"0.375"`, `"2+3i"`, `"[0.1,0.2]"`,
//! `"pi"`) are parsed into a ring-independent [`Scalar`] and then promoted into
//! the target ring with [`Coefficient::from_scalar`].

mod complex;
mod interval;
mod scalar;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use interval::Interval;
pub use scalar::{parse_literal, promote, Mode, Scalar, PI_RATIONAL};

/// Arbitrary-precision rational number; numerator and denominator are kept
/// gcd-reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Complex number over a base ring.
pub type Complex<R> = num_complex::Complex<R>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by an interval containing zero: {0}")]
    DivisionByZeroInterval(String),
    #[error("invalid interval: lower bound {lo} exceeds upper bound {hi}")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("cannot promote {value} to the {target} ring")]
    NoPromotion { value: String, target: &'static str },
    #[error("malformed coefficient literal {literal:?}: {reason}")]
    BadLiteral { literal: String, reason: String },
    #[error("unknown coefficient mode {0:?}")]
    UnknownMode(String),
}

/// Operations a coefficient ring must provide for the polynomial calculus and
/// the solvers.
///
/// Ring addition, subtraction, multiplication and negation come from the std
/// operator traits; `Zero::is_zero` decides which terms get pruned from a
/// sparse polynomial.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Name used in error messages and mode listings.
    const RING_NAME: &'static str;
    /// Arithmetic is exact (no rounding).
    const EXACT: bool;
    /// Elements carry a real ordering, so sign conditions on parameters are
    /// decidable (possibly only up to an enclosure, see [`Coefficient::real_sign`]).
    const ORDERED: bool;
    /// Elements are enclosures of the true value rather than approximations.
    const ENCLOSURE: bool = false;

    /// Ring in which residual oracles evaluate: exact rationals for the
    /// floating-point rings, the ring itself otherwise.
    type Exact: Coefficient<Exact = Self::Exact>;

    /// Exact value of this element; `None` for non-finite doubles.
    fn to_exact(&self) -> Option<Self::Exact>;

    /// Nearest element (tightest enclosure) of an exact value.
    fn from_exact(x: &Self::Exact) -> Self;

    fn from_i64(n: i64) -> Self;

    /// Value-preserving embedding of a rational; rounds to nearest for `f64`
    /// and returns the tightest enclosure for intervals.
    fn from_rational(q: &Rational) -> Self;

    /// Promotion from a parsed literal.
    fn from_scalar(s: &Scalar) -> Result<Self, RingError>;

    fn try_div(&self, rhs: &Self) -> Result<Self, RingError>;

    fn try_recip(&self) -> Result<Self, RingError> {
        Self::one().try_div(self)
    }

    /// True when zero is a possible value: exact zero for point rings, zero in
    /// the enclosure for intervals.
    fn contains_zero(&self) -> bool;

    /// Sign of a real element. `None` if the element is not real or, for
    /// intervals, straddles zero.
    fn real_sign(&self) -> Option<Ordering>;

    /// Approximate absolute value as a double (upper bound for intervals).
    fn magnitude(&self) -> f64;

    /// The imaginary unit, for rings that have one.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    /// Literal in the coefficient grammar accepted by [`parse_literal`].
    fn to_literal(&self) -> String;

    /// Sign and magnitude literal for rendering `a - b` instead of `a + -b`.
    /// Rings without a natural sign return `(false, to_literal())`.
    fn signed_literal(&self) -> (bool, String) {
        (false, self.to_literal())
    }

    /// Whether the literal needs parentheses when written as a product factor.
    fn literal_needs_parens(&self) -> bool {
        false
    }

    /// Multiply by a nonnegative integer that may exceed `i64`.
    fn mul_u128(&self, n: u128) -> Self {
        match i64::try_from(n) {
            Ok(small) => self.clone() * Self::from_i64(small),
            Err(_) => self.clone() * Self::from_rational(&Rational::from_integer(BigInt::from(n))),
        }
    }
}

impl Coefficient for f64 {
    const RING_NAME: &'static str = "double";
    const EXACT: bool = false;
    const ORDERED: bool = true;
    type Exact = Rational;

    fn to_exact(&self) -> Option<Rational> {
        Rational::from_float(*self)
    }

    fn from_exact(x: &Rational) -> Self {
        Self::from_rational(x)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_rational(q: &Rational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn from_scalar(s: &Scalar) -> Result<Self, RingError> {
        match s {
            Scalar::Rational(q) => Ok(Self::from_rational(q)),
            Scalar::Complex(z) if z.im.is_zero() => Ok(Self::from_rational(&z.re)),
            Scalar::Pi => Ok(std::f64::consts::PI),
            other => Err(no_promotion(other, Self::RING_NAME)),
        }
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if *rhs == 0.0 {
            return Err(RingError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn contains_zero(&self) -> bool {
        *self == 0.0
    }

    fn real_sign(&self) -> Option<Ordering> {
        self.partial_cmp(&0.0)
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn to_literal(&self) -> String {
        format_double(*self)
    }

    fn signed_literal(&self) -> (bool, String) {
        (self.is_sign_negative() && *self != 0.0, format_double(self.abs()))
    }
}

impl Coefficient for Rational {
    const RING_NAME: &'static str = "rational";
    const EXACT: bool = true;
    const ORDERED: bool = true;
    type Exact = Rational;

    fn to_exact(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_exact(x: &Rational) -> Self {
        x.clone()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn from_scalar(s: &Scalar) -> Result<Self, RingError> {
        match s {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Complex(z) if z.im.is_zero() => Ok(z.re.clone()),
            Scalar::Pi => Ok(PI_RATIONAL.clone()),
            other => Err(no_promotion(other, Self::RING_NAME)),
        }
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn contains_zero(&self) -> bool {
        self.is_zero()
    }

    fn real_sign(&self) -> Option<Ordering> {
        Some(self.cmp(&Rational::zero()))
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }

    fn signed_literal(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// Shortest round-trip decimal; scientific notation outside `[1e-5, 1e16)`.
/// Negative zero prints as `0`.
pub(crate) fn format_double(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let a = x.abs();
    if a.is_finite() && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn no_promotion(s: &Scalar, target: &'static str) -> RingError {
    RingError::NoPromotion {
        value: s.to_string(),
        target,
    }
}
