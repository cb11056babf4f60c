//! Operators with an invertible zeroth-order part.
//!
//! `(B(∂) + α)⁻¹ f = Σ_j (−1)^j α^{−j−1} B(∂)^j f`, and the series is finite on
//! polynomials whenever `B` has no constant term, since every application of
//! `B(∂)` lowers the degree. Helmholtz is the case `B = Σ ξ_i²`, `α = k²`. The
//! vector problems reduce to componentwise Helmholtz solves through potential
//! representations (Somigliana vector for elastodynamics, Lorenz-gauged
//! potentials for Maxwell).

use std::cmp::Ordering;

use crate::error::SolveError;
use crate::poly::{PdoSpec, PolyVector, Polynomial};
use crate::ring::{Coefficient, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct HelmholtzParams<T> {
    /// Wavenumber; `k²` must be invertible.
    pub k: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZerothOrderParams<T> {
    pub alpha: T,
    /// Operator part `B(∂)`; its symbol must have no constant term.
    pub op: PdoSpec<T>,
}

/// Isotropic time-harmonic elastic medium.
#[derive(Debug, Clone, PartialEq)]
pub struct ElastodynamicsParams<T> {
    pub rho_mass: T,
    pub mu: T,
    /// Poisson ratio, strictly between 0 and 1/2.
    pub nu: T,
    pub omega: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxwellParams<T> {
    pub eps: T,
    pub mu: T,
    pub omega: T,
}

impl<T: Coefficient> Default for MaxwellParams<T> {
    fn default() -> Self {
        MaxwellParams {
            eps: T::one(),
            mu: T::one(),
            omega: T::one(),
        }
    }
}

impl<T: Coefficient> MaxwellParams<T> {
    /// `k² = ω²εμ`.
    pub fn wavenumber_squared(&self) -> T {
        self.omega.clone() * self.omega.clone() * self.eps.clone() * self.mu.clone()
    }
}

/// Fields and potentials of a time-harmonic Maxwell solve.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxwellSolution<T> {
    pub e: PolyVector<T>,
    pub h: PolyVector<T>,
    /// Vector potential, `E = iωA − ∇φ`, `H = rot A / μ`.
    pub a: PolyVector<T>,
    pub phi: Polynomial<T>,
    /// Charge density used for `φ` (supplied or derived from the current).
    pub rho: Polynomial<T>,
}

pub(crate) fn require_positive<T: Coefficient>(name: &'static str, value: &T) -> Result<(), SolveError> {
    match value.real_sign() {
        Some(Ordering::Greater) => Ok(()),
        Some(_) => Err(SolveError::InvalidParameter {
            name,
            reason: format!("must be positive, got {}", value.to_literal()),
        }),
        None => Err(SolveError::InvalidParameter {
            name,
            reason: format!("must be real and provably positive, got {}", value.to_literal()),
        }),
    }
}

pub(crate) fn require_poisson_ratio<T: Coefficient>(nu: &T) -> Result<(), SolveError> {
    let half = T::from_rational(&Rational::new(1.into(), 2.into()));
    let in_range = nu.real_sign() == Some(Ordering::Greater)
        && (half - nu.clone()).real_sign() == Some(Ordering::Greater);
    if !in_range {
        return Err(SolveError::InvalidParameter {
            name: "nu",
            reason: format!("Poisson ratio must lie in (0, 1/2), got {}", nu.to_literal()),
        });
    }
    Ok(())
}

pub(crate) fn require_nonzero<T: Coefficient>(name: &'static str, value: &T) -> Result<(), SolveError> {
    if value.contains_zero() {
        return Err(SolveError::InvalidParameter {
            name,
            reason: format!("must be nonzero, got {}", value.to_literal()),
        });
    }
    Ok(())
}

/// `Σ_j (−1)^j α^{−j−1} B(∂)^j f` with `B(∂)` given as a closure.
fn neumann_series<T, F>(f: &Polynomial<T>, alpha: &T, mut op: F) -> Result<Polynomial<T>, SolveError>
where
    T: Coefficient,
    F: FnMut(&Polynomial<T>) -> Result<Polynomial<T>, SolveError>,
{
    let mut term = f.try_div_scalar(alpha)?;
    let mut u = Polynomial::zero(f.dim());
    while !term.is_zero() {
        u = &u + &term;
        term = (-op(&term)?).try_div_scalar(alpha)?;
    }
    Ok(u)
}

/// Helmholtz solve given `k²` directly.
pub(crate) fn helmholtz_with_k_squared<T: Coefficient>(
    f: &Polynomial<T>,
    k_squared: &T,
) -> Result<Polynomial<T>, SolveError> {
    if k_squared.contains_zero() {
        return Err(SolveError::VanishingZerothOrder);
    }
    neumann_series(f, k_squared, |p| Ok(p.laplacian(1)))
}

/// Unique polynomial `u` with `(Δ + k²)u = f`:
/// `u = Σ_{j=0}^{m} (−1)^j k^{−2(j+1)} Δ^j f`, `m` the nilpotency index of `f`.
///
/// `deg u = deg f`. Fails when `k² ` is zero (or, for intervals, may be zero).
pub fn solve_helmholtz<T: Coefficient>(
    f: &Polynomial<T>,
    params: &HelmholtzParams<T>,
) -> Result<Polynomial<T>, SolveError> {
    helmholtz_with_k_squared(f, &(params.k.clone() * params.k.clone()))
}

/// Unique polynomial `u` with `(B(∂) + α)u = f` for an operator `B(∂)` without
/// zeroth-order term.
pub fn solve_zeroth_order<T: Coefficient>(
    f: &Polynomial<T>,
    params: &ZerothOrderParams<T>,
) -> Result<Polynomial<T>, SolveError> {
    if !params.op.has_zero_constant_term() {
        return Err(SolveError::NonzeroConstantTerm);
    }
    if params.alpha.contains_zero() {
        return Err(SolveError::VanishingZerothOrder);
    }
    neumann_series(f, &params.alpha, |p| Ok(params.op.apply(p)?))
}

impl<T: Coefficient> ElastodynamicsParams<T> {
    pub fn validate(&self) -> Result<(), SolveError> {
        require_positive("rho_mass", &self.rho_mass)?;
        require_positive("mu", &self.mu)?;
        require_positive("omega", &self.omega)?;
        require_poisson_ratio(&self.nu)
    }

    /// `(k₁², k₂²)`: compressional `ω²ρ(1−2ν)/(2μ(1−ν))` and shear `ω²ρ/μ`.
    pub fn wavenumbers_squared(&self) -> Result<(T, T), SolveError> {
        let one = T::one();
        let two = T::from_i64(2);
        let w2rho = self.omega.clone() * self.omega.clone() * self.rho_mass.clone();
        let k2 = w2rho.try_div(&self.mu)?;
        let k1 = (w2rho * (one.clone() - two.clone() * self.nu.clone()))
            .try_div(&(two * self.mu.clone() * (one - self.nu.clone())))?;
        Ok((k1, k2))
    }
}

fn check_vector_shape<T: Coefficient>(family: &'static str, f: &PolyVector<T>) -> Result<(), SolveError> {
    if f.len() != f.dim() {
        return Err(SolveError::ComponentCount {
            family,
            expected: f.dim(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Time-harmonic isotropic elastodynamics
/// `Δu + (1/(1−2ν))∇(div u) + k₂²u = f`.
///
/// Solves `(Δ + k₁²)q = f/(2(1−ν))`, then `(Δ + k₂²)g = q`, and returns
/// `u = 2(1−ν)(Δ + k₁²)g − ∇(div g)`.
pub fn solve_elastodynamics<T: Coefficient>(
    f: &PolyVector<T>,
    params: &ElastodynamicsParams<T>,
) -> Result<PolyVector<T>, SolveError> {
    params.validate()?;
    check_vector_shape("elastodynamics", f)?;
    let (k1_sq, k2_sq) = params.wavenumbers_squared()?;
    let two_one_minus_nu = T::from_i64(2) * (T::one() - params.nu.clone());

    let scaled = f.try_div_scalar(&two_one_minus_nu)?;
    let q = scaled.try_map(|c| helmholtz_with_k_squared(c, &k1_sq))?;
    let g = q.try_map(|c| helmholtz_with_k_squared(c, &k2_sq))?;

    let shifted = g.laplacian(1).try_add(&g.scale(&k1_sq))?;
    let grad_div = g.divergence()?.gradient();
    Ok(shifted.scale(&two_one_minus_nu).try_sub(&grad_div)?)
}

/// Time-harmonic Maxwell system in three dimensions driven by the current `j`.
///
/// Potentials in Lorenz gauge solve `(Δ + k²)A = −μJ` and `(Δ + k²)φ = −ρ/ε`
/// with `k² = ω²εμ`; then `E = iωA − ∇φ` and `H = rot A / μ`. When `rho` is
/// `None` it is derived from charge conservation, `ρ = div J / (iω)`; a
/// supplied `rho` must satisfy `div J − iωρ = 0`.
pub fn solve_maxwell<T: Coefficient>(
    j: &PolyVector<T>,
    params: &MaxwellParams<T>,
    rho: Option<&Polynomial<T>>,
) -> Result<MaxwellSolution<T>, SolveError> {
    let i = T::imaginary_unit().ok_or(SolveError::ComplexRequired("maxwell"))?;
    if j.dim() != 3 {
        return Err(SolveError::Dimension {
            family: "maxwell",
            expected: 3,
            found: j.dim(),
        });
    }
    if j.len() != 3 {
        return Err(SolveError::ComponentCount {
            family: "maxwell",
            expected: 3,
            found: j.len(),
        });
    }
    require_nonzero("eps", &params.eps)?;
    require_nonzero("mu", &params.mu)?;
    require_nonzero("omega", &params.omega)?;
    let k_sq = params.wavenumber_squared();
    if k_sq.contains_zero() {
        return Err(SolveError::VanishingZerothOrder);
    }
    let i_omega = i * params.omega.clone();

    let rho = match rho {
        Some(r) => {
            if !crate::verify::validate_maxwell_source(j, r, params)? {
                return Err(SolveError::ChargeNotConserved);
            }
            r.clone()
        }
        None => j.divergence()?.try_div_scalar(&i_omega)?,
    };

    let a = j
        .scale(&-params.mu.clone())
        .try_map(|c| helmholtz_with_k_squared(c, &k_sq))?;
    let phi = helmholtz_with_k_squared(&(-rho.try_div_scalar(&params.eps)?), &k_sq)?;

    let e = a.scale(&i_omega).try_sub(&phi.gradient())?;
    let h = a.curl()?.try_div_scalar(&params.mu)?;
    Ok(MaxwellSolution { e, h, a, phi, rho })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Complex;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rp(dim: usize, terms: &[(&[u32], Rational)]) -> Polynomial<Rational> {
        Polynomial::from_terms(dim, terms.iter().map(|(e, c)| (*e, c.clone()))).unwrap()
    }

    #[test]
    fn helmholtz_rational_reference() {
        let f = rp(3, &[(&[2, 3, 1], q(1, 1))]);
        let u = solve_helmholtz(&f, &HelmholtzParams { k: q(2, 1) }).unwrap();
        let expected = rp(
            3,
            &[
                (&[0, 1, 1], q(3, 8)),
                (&[0, 3, 1], q(-1, 8)),
                (&[2, 1, 1], q(-3, 8)),
                (&[2, 3, 1], q(1, 4)),
            ],
        );
        assert_eq!(u, expected);
    }

    #[test]
    fn constants_and_quadratics() {
        let one = Polynomial::constant(3, q(1, 1));
        assert_eq!(solve_helmholtz(&one, &HelmholtzParams { k: q(1, 1) }).unwrap(), one);
        // Δu + u = x² → u = x² − 2
        let x2 = rp(2, &[(&[2, 0], q(1, 1))]);
        let u = solve_helmholtz(&x2, &HelmholtzParams { k: q(1, 1) }).unwrap();
        assert_eq!(u, rp(2, &[(&[2, 0], q(1, 1)), (&[0, 0], q(-2, 1))]));
    }

    #[test]
    fn zero_wavenumber_rejected() {
        let f = rp(2, &[(&[1, 0], q(1, 1))]);
        let err = solve_helmholtz(&f, &HelmholtzParams { k: Rational::zero() }).unwrap_err();
        assert_eq!(err, SolveError::VanishingZerothOrder);
        assert_eq!(err.to_string(), "zeroth-order term vanishes; use Poisson solver");
    }

    #[test]
    fn advection_operator() {
        // (∂x + 1)u = x² → u = x² − 2x + 2
        let op = PdoSpec::new(rp(1, &[(&[1], q(1, 1))]));
        let f = rp(1, &[(&[2], q(1, 1))]);
        let u = solve_zeroth_order(&f, &ZerothOrderParams { alpha: q(1, 1), op }).unwrap();
        assert_eq!(u, rp(1, &[(&[2], q(1, 1)), (&[1], q(-2, 1)), (&[0], q(2, 1))]));
    }

    #[test]
    fn zeroth_order_preconditions() {
        let with_constant = PdoSpec::new(rp(2, &[(&[0, 0], q(1, 1)), (&[2, 0], q(1, 1))]));
        let f = Polynomial::zero(2);
        let params = ZerothOrderParams { alpha: q(1, 1), op: with_constant };
        assert_eq!(solve_zeroth_order(&f, &params), Err(SolveError::NonzeroConstantTerm));
        let params = ZerothOrderParams { alpha: Rational::zero(), op: PdoSpec::laplacian(2) };
        assert_eq!(solve_zeroth_order(&f, &params), Err(SolveError::VanishingZerothOrder));
        let params = ZerothOrderParams { alpha: q(3, 1), op: PdoSpec::laplacian(2) };
        assert!(solve_zeroth_order(&f, &params).unwrap().is_zero());
    }

    fn elastic(nu: Rational) -> ElastodynamicsParams<Rational> {
        ElastodynamicsParams { rho_mass: q(1, 1), mu: q(1, 1), nu, omega: q(1, 1) }
    }

    #[test]
    fn elastodynamics_wavenumbers() {
        let (k1, k2) = elastic(q(1, 4)).wavenumbers_squared().unwrap();
        assert_eq!(k1, q(1, 3));
        assert_eq!(k2, q(1, 1));
    }

    #[test]
    fn elastodynamics_parameter_validation() {
        let f = PolyVector::zero(2, 2);
        for nu in [q(0, 1), q(1, 2), q(-1, 4), q(3, 4)] {
            assert!(matches!(
                solve_elastodynamics(&f, &elastic(nu)),
                Err(SolveError::InvalidParameter { name: "nu", .. })
            ));
        }
        let mut p = elastic(q(1, 4));
        p.mu = q(-1, 1);
        assert!(solve_elastodynamics(&f, &p).is_err());
        let mut p = elastic(q(1, 4));
        p.omega = Rational::zero();
        assert!(solve_elastodynamics(&f, &p).is_err());
        assert!(solve_elastodynamics(&f, &elastic(q(1, 4))).unwrap().is_zero());
    }

    #[test]
    fn maxwell_needs_complex_ring() {
        let j = PolyVector::<Rational>::zero(3, 3);
        assert_eq!(
            solve_maxwell(&j, &MaxwellParams::default(), None),
            Err(SolveError::ComplexRequired("maxwell"))
        );
    }

    #[test]
    fn maxwell_reference_in_double_complex() {
        let c = |x: f64| Complex::new(x, 0.0);
        let j = PolyVector::new(vec![
            Polynomial::monomial(&[2, 1, 0], c(1.0)),
            Polynomial::monomial(&[1, 0, 0], c(1.0)),
            Polynomial::monomial(&[0, 0, 0], c(1.0)),
        ])
        .unwrap();
        let params = MaxwellParams { mu: c(2.0), ..MaxwellParams::default() };
        let sol = solve_maxwell(&j, &params, None).unwrap();
        assert_eq!(sol.e.to_string(), "(-i*x^2*y, -2i*x, -i)");
        assert_eq!(sol.h.to_string(), "(0, 0, -1 + 0.5*x^2)");
    }

    #[test]
    fn maxwell_rejects_non_conserving_charge() {
        let c = |x: i64| Complex::new(Rational::from_integer(x.into()), Rational::zero());
        let j = PolyVector::new(vec![
            Polynomial::monomial(&[1, 0, 0], c(1)),
            Polynomial::zero(3),
            Polynomial::zero(3),
        ])
        .unwrap();
        let rho = Polynomial::zero(3);
        assert_eq!(
            solve_maxwell(&j, &MaxwellParams::default(), Some(&rho)),
            Err(SolveError::ChargeNotConserved)
        );
    }
}
