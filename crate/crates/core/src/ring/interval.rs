use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_double, Coefficient, Rational, RingError, Scalar};

/// Closed interval `[lo, hi]` of doubles.
///
/// Every arithmetic result encloses the exact real result for all operands in
/// the input enclosures. Endpoints are rounded outward exactly: the rounding
/// error of each endpoint operation is recovered with an error-free
/// transformation (TwoSum, FMA residuals) and the endpoint is moved one ulp
/// only when the rounded value landed on the wrong side. Where the error-free
/// transformation is not exact (overflow, subnormal range) the endpoint is
/// nudged one ulp unconditionally.
///
/// The process-wide floating-point rounding mode is never touched.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, RingError> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return Err(RingError::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    /// Tightest interval of doubles containing `q`.
    pub fn enclose(q: &Rational) -> Self {
        let nearest = f64::from_rational(q);
        if !nearest.is_finite() {
            let lo = if nearest > 0.0 { f64::MAX } else { f64::NEG_INFINITY };
            let hi = if nearest < 0.0 { f64::MIN } else { f64::INFINITY };
            return Self { lo, hi };
        }
        let exact = Rational::from_float(nearest).expect("finite double");
        match exact.cmp(q) {
            Ordering::Equal => Self::point(nearest),
            Ordering::Less => Self {
                lo: nearest,
                hi: nearest.next_up(),
            },
            Ordering::Greater => Self {
                lo: nearest.next_down(),
                hi: nearest,
            },
        }
    }

    /// Enclosure of pi.
    pub fn pi() -> Self {
        // The double nearest to pi lies below it.
        let pi = std::f64::consts::PI;
        Self { lo: pi, hi: pi.next_up() }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        self.lo / 2.0 + self.hi / 2.0
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Exact containment test for a rational value.
    pub fn contains_rational(&self, q: &Rational) -> bool {
        let below = match Rational::from_float(self.lo) {
            Some(lo) => lo <= *q,
            None => self.lo == f64::NEG_INFINITY,
        };
        let above = match Rational::from_float(self.hi) {
            Some(hi) => *q <= hi,
            None => self.hi == f64::INFINITY,
        };
        below && above
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn hull(&self, other: &Interval) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", format_double(self.lo), format_double(self.hi))
    }
}

/// Rounded result plus the sign of `exact - rounded`; `None` when the sign
/// could not be determined exactly.
type Rounded = (f64, Option<Ordering>);

fn sum_rounded(a: f64, b: f64) -> Rounded {
    let s = a + b;
    if !s.is_finite() {
        return (s, None);
    }
    // TwoSum (Knuth): s + err == a + b exactly.
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err.partial_cmp(&0.0))
}

fn product_rounded(a: f64, b: f64) -> Rounded {
    if a == 0.0 || b == 0.0 {
        return (0.0, Some(Ordering::Equal));
    }
    let p = a * b;
    // The FMA residual is exact unless the product is near the underflow range.
    if !p.is_finite() || p.abs() < f64::MIN_POSITIVE * 2f64.powi(54) {
        return (p, None);
    }
    let err = a.mul_add(b, -p);
    (p, err.partial_cmp(&0.0))
}

fn quotient_rounded(a: f64, b: f64) -> Rounded {
    if a == 0.0 {
        return (0.0, Some(Ordering::Equal));
    }
    let q = a / b;
    if !q.is_finite() || q.abs() < f64::MIN_POSITIVE * 2f64.powi(54) || a.abs() < f64::MIN_POSITIVE * 2f64.powi(54) {
        return (q, None);
    }
    // r = a - q*b exactly; sign(a/b - q) = sign(r) * sign(b).
    let r = -q.mul_add(b, -a);
    let sign = r.partial_cmp(&0.0).map(|s| if b < 0.0 { s.reverse() } else { s });
    (q, sign)
}

fn round_down((x, sign): Rounded) -> f64 {
    match sign {
        Some(Ordering::Equal) | Some(Ordering::Greater) => x,
        _ => x.next_down(),
    }
}

fn round_up((x, sign): Rounded) -> f64 {
    match sign {
        Some(Ordering::Equal) | Some(Ordering::Less) => x,
        _ => x.next_up(),
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        Interval {
            lo: round_down(sum_rounded(self.lo, rhs.lo)),
            hi: round_up(sum_rounded(self.hi, rhs.hi)),
        }
    }
}

impl Sub for Interval {
    type Output = Interval;

    fn sub(self, rhs: Interval) -> Interval {
        self + (-rhs)
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, rhs: Interval) -> Interval {
        let pairs = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in pairs {
            let r = product_rounded(a, b);
            lo = lo.min(round_down(r));
            hi = hi.max(round_up(r));
        }
        Interval { lo, hi }
    }
}

impl Zero for Interval {
    fn zero() -> Self {
        Interval::point(0.0)
    }

    fn is_zero(&self) -> bool {
        self.lo == 0.0 && self.hi == 0.0
    }
}

impl One for Interval {
    fn one() -> Self {
        Interval::point(1.0)
    }
}

impl Coefficient for Interval {
    const RING_NAME: &'static str = "interval";
    const EXACT: bool = false;
    const ORDERED: bool = true;
    const ENCLOSURE: bool = true;
    type Exact = Interval;

    fn to_exact(&self) -> Option<Interval> {
        Some(*self)
    }

    fn from_exact(x: &Interval) -> Self {
        *x
    }

    fn from_i64(n: i64) -> Self {
        if n.unsigned_abs() <= 1 << 53 {
            Interval::point(n as f64)
        } else {
            Interval::enclose(&Rational::from_integer(n.into()))
        }
    }

    fn from_rational(q: &Rational) -> Self {
        Interval::enclose(q)
    }

    fn from_scalar(s: &Scalar) -> Result<Self, RingError> {
        match s {
            Scalar::Rational(q) => Ok(Interval::enclose(q)),
            Scalar::Complex(z) if z.im.is_zero() => Ok(Interval::enclose(&z.re)),
            Scalar::Interval(i) => Ok(*i),
            Scalar::Pi => Ok(Interval::pi()),
            other => Err(super::no_promotion(other, Self::RING_NAME)),
        }
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.contains_zero() {
            return Err(RingError::DivisionByZeroInterval(rhs.to_string()));
        }
        let pairs = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in pairs {
            let r = quotient_rounded(a, b);
            lo = lo.min(round_down(r));
            hi = hi.max(round_up(r));
        }
        Ok(Interval { lo, hi })
    }

    fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    fn real_sign(&self) -> Option<Ordering> {
        if self.lo > 0.0 {
            Some(Ordering::Greater)
        } else if self.hi < 0.0 {
            Some(Ordering::Less)
        } else if self.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    fn magnitude(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }

    fn signed_literal(&self) -> (bool, String) {
        if self.hi < 0.0 {
            (true, (-*self).to_string())
        } else {
            (false, self.to_string())
        }
    }
}
