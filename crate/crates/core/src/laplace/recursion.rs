use num_bigint::BigInt;

use crate::ring::Rational;

/// `γ_ℓ^n = 2(ℓ+1)(2ℓ+2n+d)`, the factor in `Δ(r^{2ℓ+2} h_n) = γ_ℓ^n r^{2ℓ} h_n + r^{2ℓ+2} Δh_n`
/// for `h_n` homogeneous of degree `n` in `d` variables.
pub fn gamma(l: u32, n: i64, d: usize) -> i64 {
    let l = i64::from(l);
    2 * (l + 1) * (2 * l + 2 * n + d as i64)
}

fn positive_gamma(l: u32, n: i64, d: usize) -> BigInt {
    let g = gamma(l, n, d);
    assert!(g > 0, "recursion denominator gamma({l}, {n}, {d}) = {g} is not positive");
    BigInt::from(g)
}

/// Coefficients `c_0 … c_m` of a radial ansatz for one homogeneous part of
/// degree `n` in `d` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionCoefficients {
    pub degree: u32,
    pub dim: usize,
    coefficients: Vec<Rational>,
}

impl RecursionCoefficients {
    /// `u = Σ c_ℓ r^{2ℓ+2} Δ^ℓ h` solves `Δu = h` with
    /// `c_0 = 1/(2(2n+d))` and `c_ℓ = −c_{ℓ−1} / (2(ℓ+1)(2n−2ℓ+d))`.
    ///
    /// # Panics
    ///
    /// Panics if `m > n/2` or `d == 0`, where a denominator would not be positive.
    pub fn poisson(n: u32, d: usize, m: u32) -> Self {
        assert!(d > 0 && m <= n / 2, "need d > 0 and m <= n/2 (n = {n}, d = {d}, m = {m})");
        let n = i64::from(n);
        let mut coefficients = Vec::with_capacity(m as usize + 1);
        coefficients.push(Rational::new(BigInt::from(1), positive_gamma(0, n, d)));
        for l in 1..=m {
            let prev = &coefficients[l as usize - 1];
            let next = -prev / Rational::from_integer(positive_gamma(l, n - 2 * i64::from(l), d));
            coefficients.push(next);
        }
        RecursionCoefficients {
            degree: n as u32,
            dim: d,
            coefficients,
        }
    }

    /// `u = Σ c_ℓ r^{2ℓ+4} Δ^ℓ h` solves `Δ²u = h` with
    ///
    /// `c_ℓ γ_ℓ^{n−2ℓ} γ_{ℓ+1}^{n−2ℓ} = −(γ_ℓ^{n+2−2ℓ} + γ_ℓ^{n−2ℓ}) c_{ℓ−1} − c_{ℓ−2}`,
    ///
    /// starting from `c_0 = 1/(γ_0^n γ_1^n)` (terms with negative index vanish).
    /// The middle factor collects `Δ(r^{2ℓ+2}Δh)`, where `Δh` has degree `n−2`.
    ///
    /// # Panics
    ///
    /// Panics if `m > n/2` or `d == 0`.
    pub fn bilaplace(n: u32, d: usize, m: u32) -> Self {
        assert!(d > 0 && m <= n / 2, "need d > 0 and m <= n/2 (n = {n}, d = {d}, m = {m})");
        let n = i64::from(n);
        let mut coefficients: Vec<Rational> = Vec::with_capacity(m as usize + 1);
        coefficients.push(Rational::new(
            BigInt::from(1),
            positive_gamma(0, n, d) * positive_gamma(1, n, d),
        ));
        for l in 1..=m {
            let shifted = n - 2 * i64::from(l);
            let mid = positive_gamma(l, shifted + 2, d) + positive_gamma(l, shifted, d);
            let mut numer = -(Rational::from_integer(mid) * &coefficients[l as usize - 1]);
            if l >= 2 {
                numer -= &coefficients[l as usize - 2];
            }
            let denom = positive_gamma(l, shifted, d) * positive_gamma(l + 1, shifted, d);
            coefficients.push(numer / Rational::from_integer(denom));
        }
        RecursionCoefficients {
            degree: n as u32,
            dim: d,
            coefficients,
        }
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(0, 0, 2), 4);
        assert_eq!(gamma(1, 0, 2), 16);
        assert_eq!(gamma(0, 2, 3), 14);
    }

    #[test]
    fn poisson_coefficients() {
        assert_eq!(RecursionCoefficients::poisson(0, 2, 0).as_slice(), &[q(1, 4)]);
        assert_eq!(RecursionCoefficients::poisson(2, 2, 1).as_slice(), &[q(1, 12), q(-1, 192)]);
        assert_eq!(RecursionCoefficients::poisson(2, 3, 0).as_slice(), &[q(1, 14)]);
    }

    #[test]
    fn bilaplace_coefficients() {
        assert_eq!(RecursionCoefficients::bilaplace(0, 2, 0).as_slice(), &[q(1, 64)]);
        // n = 2, d = 2: c_0 = 1/(12·32), c_1 = −(32 + 16)c_0/(16·36)
        let c = RecursionCoefficients::bilaplace(2, 2, 1);
        assert_eq!(c.as_slice(), &[q(1, 384), q(-1, 4608)]);
    }

    #[test]
    #[should_panic(expected = "m <= n/2")]
    fn nilpotency_bound_enforced() {
        RecursionCoefficients::poisson(2, 2, 2);
    }
}
