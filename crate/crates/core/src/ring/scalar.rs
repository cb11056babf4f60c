use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use super::{Coefficient, Complex, Interval, Rational, RingError};

/// Ring-independent value of a coefficient literal.
///
/// Decimal literals are kept exact (`"0.1"` is `1/10`) so that promotion to a
/// target ring rounds exactly once.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Complex(Complex<Rational>),
    Interval(Interval),
    /// Expanded per ring: nearest double, enclosing interval, or [`PI_RATIONAL`].
    Pi,
}

/// Rational approximation of pi used by the exact rings; error below 1e-49.
pub static PI_RATIONAL: LazyLock<Rational> = LazyLock::new(|| {
    let digits = "314159265358979323846264338327950288419716939937510";
    Rational::new(
        BigInt::from_str(digits).expect("digits"),
        BigInt::from(10).pow(digits.len() as u32 - 1),
    )
});

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Complex(z) => f.write_str(&z.to_literal()),
            Scalar::Interval(i) => write!(f, "{i}"),
            Scalar::Pi => f.write_str("pi"),
        }
    }
}

/// Promote a parsed literal into the ring `T`.
///
/// Paths: integer → rational → double → interval, and any real into the
/// complex ring over the same base. Complex values with a nonzero imaginary
/// part only promote into complex rings; intervals only into the interval ring.
pub fn promote<T: Coefficient>(s: &Scalar) -> Result<T, RingError> {
    T::from_scalar(s)
}

/// Parse a coefficient literal: `"3/8"`, `"-2"`, `"0.375"`, `"1.5e-3"`,
/// `"2+3i"`, `"-i"`, `"[0.1,0.2]"` or `"pi"`.
pub fn parse_literal(text: &str) -> Result<Scalar, RingError> {
    let s = text.trim();
    let bad = |reason: &str| RingError::BadLiteral {
        literal: text.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(bad("empty literal"));
    }
    if s == "pi" {
        return Ok(Scalar::Pi);
    }
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| bad("unterminated interval"))?;
        let (lo, hi) = inner.split_once(',').ok_or_else(|| bad("interval needs two bounds"))?;
        let lo = parse_real(lo.trim()).map_err(|r| bad(&r))?;
        let hi = parse_real(hi.trim()).map_err(|r| bad(&r))?;
        if lo > hi {
            return Err(bad("lower bound exceeds upper bound"));
        }
        let lo = Interval::enclose(&lo).lo();
        let hi = Interval::enclose(&hi).hi();
        return Ok(Scalar::Interval(Interval::new(lo, hi)?));
    }
    if let Some(body) = s.strip_suffix('i') {
        let (re, im) = split_complex(body);
        let re = if re.is_empty() {
            Rational::zero()
        } else {
            parse_real(re).map_err(|r| bad(&r))?
        };
        let im = match im {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_real(other.strip_prefix('+').unwrap_or(other)).map_err(|r| bad(&r))?,
        };
        return Ok(Scalar::Complex(Complex::new(re, im)));
    }
    parse_real(s).map(Scalar::Rational).map_err(|r| bad(&r))
}

/// Split `a+b` / `a-b` at the sign that starts the imaginary part. A sign at
/// position 0 or directly after an exponent marker does not split.
fn split_complex(body: &str) -> (&str, &str) {
    let bytes = body.as_bytes();
    for pos in (1..bytes.len()).rev() {
        if (bytes[pos] == b'+' || bytes[pos] == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
            return (&body[..pos], &body[pos..]);
        }
    }
    ("", body)
}

/// Exact value of an integer, fraction or decimal (with optional exponent).
fn parse_real(s: &str) -> Result<Rational, String> {
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_int(n.trim())?;
        let d = parse_int(d.trim())?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in {s:?}"))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("no digits in {s:?}"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("not a number: {s:?}"));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&all_digits).map_err(|e| e.to_string())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= ten.pow(scale);
    } else {
        value /= ten.pow(-scale);
    }
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("not an integer: {s:?}"));
    }
    BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).map_err(|e| e.to_string())
}

/// Coefficient ring selected for a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Double,
    /// Exact rationals. Backed by arbitrary-precision integers, same as
    /// [`Mode::RationalBig`]; kept as a separate name for input compatibility.
    Rational,
    RationalBig,
    Interval,
    Complex,
    ComplexRational,
}

impl Mode {
    pub const ALL: [Mode; 6] = [
        Mode::Double,
        Mode::Rational,
        Mode::RationalBig,
        Mode::Interval,
        Mode::Complex,
        Mode::ComplexRational,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Double => "double",
            Mode::Rational => "rational",
            Mode::RationalBig => "rational-big",
            Mode::Interval => "interval",
            Mode::Complex => "complex",
            Mode::ComplexRational => "complex-rational",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Mode::Rational | Mode::RationalBig | Mode::ComplexRational)
    }

    /// The complex mode over the same base ring, if one exists.
    pub fn complexified(self) -> Option<Mode> {
        match self {
            Mode::Double | Mode::Complex => Some(Mode::Complex),
            Mode::Rational | Mode::RationalBig | Mode::ComplexRational => Some(Mode::ComplexRational),
            Mode::Interval => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| RingError::UnknownMode(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn real_literals() {
        assert_eq!(parse_literal("3/8").unwrap(), Scalar::Rational(q(3, 8)));
        assert_eq!(parse_literal("0.375").unwrap(), Scalar::Rational(q(3, 8)));
        assert_eq!(parse_literal("-2").unwrap(), Scalar::Rational(q(-2, 1)));
        assert_eq!(parse_literal("1.5e-3").unwrap(), Scalar::Rational(q(3, 2000)));
        assert_eq!(parse_literal("2E2").unwrap(), Scalar::Rational(q(200, 1)));
        assert_eq!(parse_literal(" .5 ").unwrap(), Scalar::Rational(q(1, 2)));
    }

    #[test]
    fn complex_literals() {
        let c = |a: Rational, b: Rational| Scalar::Complex(Complex::new(a, b));
        assert_eq!(parse_literal("2+3i").unwrap(), c(q(2, 1), q(3, 1)));
        assert_eq!(parse_literal("1/2-3/4i").unwrap(), c(q(1, 2), q(-3, 4)));
        assert_eq!(parse_literal("-i").unwrap(), c(q(0, 1), q(-1, 1)));
        assert_eq!(parse_literal("i").unwrap(), c(q(0, 1), q(1, 1)));
        assert_eq!(parse_literal("-2i").unwrap(), c(q(0, 1), q(-2, 1)));
        assert_eq!(parse_literal("1e-3+2e+1i").unwrap(), c(q(1, 1000), q(20, 1)));
        assert_eq!(parse_literal("0-1i").unwrap(), c(q(0, 1), q(-1, 1)));
    }

    #[test]
    fn interval_literal_encloses_decimals() {
        let Scalar::Interval(i) = parse_literal("[0.1,0.2]").unwrap() else {
            panic!("expected interval");
        };
        assert!(i.contains_rational(&q(1, 10)));
        assert!(i.contains_rational(&q(2, 10)));
        assert!(parse_literal("[2,1]").is_err());
    }

    #[test]
    fn malformed_literals() {
        for bad in ["", "abc", "1/0", "[1,2", "1..2", "3/x", "--1", "1e", "[1]"] {
            assert!(parse_literal(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn pi_per_ring() {
        let d: f64 = promote(&Scalar::Pi).unwrap();
        assert_eq!(d, std::f64::consts::PI);
        let i: Interval = promote(&Scalar::Pi).unwrap();
        assert!(i.contains_rational(&PI_RATIONAL));
        let r: Rational = promote(&Scalar::Pi).unwrap();
        let err = r - q(3_141_592_653_589_793, 1_000_000_000_000_000);
        assert!(err > Rational::zero() && err < q(1, 1_000_000_000_000_000));
    }

    #[test]
    fn no_promotion_paths() {
        let z = parse_literal("1+i").unwrap();
        assert!(promote::<f64>(&z).is_err());
        assert!(promote::<Rational>(&z).is_err());
        assert!(promote::<Interval>(&z).is_err());
        let iv = parse_literal("[1,2]").unwrap();
        assert!(promote::<Rational>(&iv).is_err());
        assert!(promote::<Complex<f64>>(&iv).is_err());
        // A complex literal with zero imaginary part is real.
        assert_eq!(promote::<f64>(&parse_literal("2+0i").unwrap()).unwrap(), 2.0);
    }

    #[test]
    fn modes_parse() {
        for m in Mode::ALL {
            assert_eq!(m.as_str().parse::<Mode>().unwrap(), m);
        }
        assert!("quaternion".parse::<Mode>().is_err());
    }
}
