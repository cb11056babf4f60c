use std::cmp::Ordering;

use num_traits::{Num, Zero};

use super::{Coefficient, Complex, Rational, RingError, Scalar};

/// Complex numbers over `f64` or [`Rational`].
impl<R> Coefficient for Complex<R>
where
    R: Coefficient + Num,
    R::Exact: Num,
{
    const RING_NAME: &'static str = if R::EXACT { "complex-rational" } else { "complex" };
    const EXACT: bool = R::EXACT;
    const ORDERED: bool = false;
    type Exact = Complex<R::Exact>;

    fn to_exact(&self) -> Option<Self::Exact> {
        Some(Complex::new(self.re.to_exact()?, self.im.to_exact()?))
    }

    fn from_exact(x: &Self::Exact) -> Self {
        Complex::new(R::from_exact(&x.re), R::from_exact(&x.im))
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(R::from_i64(n), R::zero())
    }

    fn from_rational(q: &Rational) -> Self {
        Complex::new(R::from_rational(q), R::zero())
    }

    fn from_scalar(s: &Scalar) -> Result<Self, RingError> {
        match s {
            Scalar::Complex(z) => Ok(Complex::new(R::from_rational(&z.re), R::from_rational(&z.im))),
            Scalar::Interval(_) => Err(RingError::NoPromotion {
                value: s.to_string(),
                target: Self::RING_NAME,
            }),
            other => Ok(Complex::new(R::from_scalar(other)?, R::zero())),
        }
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(self.clone() / rhs.clone())
    }

    fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    fn real_sign(&self) -> Option<Ordering> {
        if self.im.is_zero() {
            self.re.real_sign()
        } else {
            None
        }
    }

    fn magnitude(&self) -> f64 {
        self.re.magnitude().hypot(self.im.magnitude())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(R::zero(), R::one()))
    }

    /// `a+bi` / `a-bi`.
    fn to_literal(&self) -> String {
        let re = self.re.to_literal();
        let (neg, im) = self.im.signed_literal();
        format!("{re}{}{im}i", if neg { '-' } else { '+' })
    }

    /// Purely real or imaginary values drop the vanishing part: `-2i`, `0.5`.
    fn signed_literal(&self) -> (bool, String) {
        if self.im.is_zero() {
            return self.re.signed_literal();
        }
        if self.re.is_zero() {
            let (neg, im) = self.im.signed_literal();
            return (neg, if im == "1" { "i".to_string() } else { format!("{im}i") });
        }
        (false, self.to_literal())
    }

    fn literal_needs_parens(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}
