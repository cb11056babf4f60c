//! Residual oracles.
//!
//! Every check applies the forward operator of a PDE family to a candidate
//! solution using only derivatives and ring arithmetic, then subtracts the
//! right-hand side. Nothing here calls a solver.

use crate::error::SolveError;
use crate::helmholtz::{ElastodynamicsParams, HelmholtzParams, MaxwellParams, ZerothOrderParams};
use crate::laplace::{AnisotropyMatrix, ElastostaticsParams, StokesParams};
pub use crate::pde::{Field, PdeSpec, Solution};
use crate::poly::{PdoSpec, PolyVector, Polynomial};
use crate::ring::Coefficient;

/// Relative tolerance for floating-point residuals.
pub const FLOAT_TOLERANCE: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport<T> {
    /// `operator(solution) − rhs`.
    pub residual: Field<T>,
    /// The residual has no terms at all.
    pub exact_zero: bool,
    /// Largest coefficient magnitude over the residual and all constraints.
    pub max_coeff_magnitude: f64,
    /// Largest coefficient magnitude of the right-hand side.
    pub rhs_scale: f64,
    /// Side conditions, e.g. `div_u` or `lorenz_gauge`.
    pub constraint_residuals: Vec<(String, Field<T>)>,
}

impl<T: Coefficient> ResidualReport<T> {
    fn new(residual: Field<T>, rhs_scale: f64, constraint_residuals: Vec<(String, Field<T>)>) -> Self {
        let max_coeff_magnitude = constraint_residuals
            .iter()
            .map(|(_, c)| c.max_coefficient_magnitude())
            .fold(residual.max_coefficient_magnitude(), f64::max);
        ResidualReport {
            exact_zero: residual.is_zero(),
            residual,
            max_coeff_magnitude,
            rhs_scale,
            constraint_residuals,
        }
    }

    pub fn constraint(&self, name: &str) -> Option<&Field<T>> {
        self.constraint_residuals.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    fn fields(&self) -> impl Iterator<Item = &Field<T>> {
        std::iter::once(&self.residual).chain(self.constraint_residuals.iter().map(|(_, f)| f))
    }

    /// Exact rings: every residual is the zero polynomial. Intervals: every
    /// coefficient encloses zero. Floating point: every coefficient is within
    /// [`FLOAT_TOLERANCE`] of the largest right-hand side coefficient (or of 1
    /// when the right-hand side vanishes).
    pub fn is_satisfied(&self) -> bool {
        if T::EXACT {
            self.fields().all(Field::is_zero)
        } else if T::ENCLOSURE {
            self.fields().all(Field::all_contain_zero)
        } else {
            within_tolerance(self.max_coeff_magnitude, self.rhs_scale)
        }
    }
}

fn within_tolerance(magnitude: f64, scale: f64) -> bool {
    let scale = if scale > 0.0 { scale } else { 1.0 };
    magnitude <= FLOAT_TOLERANCE * scale
}

fn exact<T: Coefficient>(c: &T) -> Result<T::Exact, SolveError> {
    c.to_exact().ok_or_else(|| SolveError::NonFinite(c.to_literal()))
}

fn exact_poly<T: Coefficient>(p: &Polynomial<T>) -> Result<Polynomial<T::Exact>, SolveError> {
    p.try_map_coefficients(exact)
}

fn exact_vector<T: Coefficient>(v: &PolyVector<T>) -> Result<PolyVector<T::Exact>, SolveError> {
    let components = v.components().iter().map(exact_poly).collect::<Result<Vec<_>, _>>()?;
    Ok(PolyVector::new(components)?)
}

fn exact_matrix<T: Coefficient>(a: &AnisotropyMatrix<T>) -> Result<AnisotropyMatrix<T::Exact>, SolveError> {
    let entries = a
        .entries()
        .iter()
        .map(|row| row.iter().map(exact).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    AnisotropyMatrix::new(entries)
}

impl<T: Coefficient> PdeSpec<T> {
    fn to_exact(&self) -> Result<PdeSpec<T::Exact>, SolveError> {
        Ok(match self {
            PdeSpec::Helmholtz(p) => PdeSpec::Helmholtz(HelmholtzParams { k: exact(&p.k)? }),
            PdeSpec::ZerothOrder(p) => PdeSpec::ZerothOrder(ZerothOrderParams {
                alpha: exact(&p.alpha)?,
                op: PdoSpec::new(exact_poly(p.op.symbol())?),
            }),
            PdeSpec::Elastodynamics(p) => PdeSpec::Elastodynamics(ElastodynamicsParams {
                rho_mass: exact(&p.rho_mass)?,
                mu: exact(&p.mu)?,
                nu: exact(&p.nu)?,
                omega: exact(&p.omega)?,
            }),
            PdeSpec::Maxwell { params, rho } => PdeSpec::Maxwell {
                params: MaxwellParams {
                    eps: exact(&params.eps)?,
                    mu: exact(&params.mu)?,
                    omega: exact(&params.omega)?,
                },
                rho: rho.as_ref().map(exact_poly).transpose()?,
            },
            PdeSpec::Poisson => PdeSpec::Poisson,
            PdeSpec::Bilaplace(m) => PdeSpec::Bilaplace(*m),
            PdeSpec::Elastostatics(p) => PdeSpec::Elastostatics(ElastostaticsParams {
                nu: exact(&p.nu)?,
                mu: exact(&p.mu)?,
            }),
            PdeSpec::Stokes(p) => PdeSpec::Stokes(StokesParams { mu: exact(&p.mu)? }),
            PdeSpec::AnisotropicPoisson(a) => PdeSpec::AnisotropicPoisson(exact_matrix(a)?),
            PdeSpec::FactorizedAnisotropic(factors) => {
                PdeSpec::FactorizedAnisotropic(factors.iter().map(exact_matrix).collect::<Result<_, _>>()?)
            }
        })
    }
}

impl<T: Coefficient> Solution<T> {
    fn to_exact(&self) -> Result<Solution<T::Exact>, SolveError> {
        Ok(match self {
            Solution::Scalar(p) => Solution::Scalar(exact_poly(p)?),
            Solution::Vector(v) => Solution::Vector(exact_vector(v)?),
            Solution::Stokes { u, p } => Solution::Stokes {
                u: exact_vector(u)?,
                p: exact_poly(p)?,
            },
            Solution::Maxwell { e, h, potentials } => Solution::Maxwell {
                e: exact_vector(e)?,
                h: exact_vector(h)?,
                potentials: match potentials {
                    Some((a, phi)) => Some((exact_vector(a)?, exact_poly(phi)?)),
                    None => None,
                },
            },
        })
    }
}

impl<T: Coefficient> Field<T> {
    fn to_exact(&self) -> Result<Field<T::Exact>, SolveError> {
        Ok(match self {
            Field::Scalar(p) => Field::Scalar(exact_poly(p)?),
            Field::Vector(v) => Field::Vector(exact_vector(v)?),
        })
    }
}

impl<E: Coefficient> Field<E> {
    fn into_ring<T: Coefficient<Exact = E>>(self) -> Field<T> {
        match self {
            Field::Scalar(p) => Field::Scalar(p.map_coefficients(T::from_exact)),
            Field::Vector(v) => Field::Vector(PolyVector::new(
                v.into_components().iter().map(|p| p.map_coefficients(T::from_exact)).collect(),
            ).expect("shape preserved")),
        }
    }
}

fn shape(family: &'static str) -> SolveError {
    SolveError::ShapeMismatch(family)
}

fn vector_rhs<'a, T>(family: &'static str, rhs: &'a Field<T>) -> Result<&'a PolyVector<T>, SolveError> {
    match rhs {
        Field::Vector(v) => Ok(v),
        Field::Scalar(_) => Err(shape(family)),
    }
}

fn same_shape<T: Coefficient>(family: &'static str, u: &PolyVector<T>, f: &PolyVector<T>) -> Result<(), SolveError> {
    if u.len() != f.len() || u.dim() != f.dim() || f.len() != f.dim() {
        return Err(shape(family));
    }
    Ok(())
}

/// `Σ A_ij ∂_i ∂_j u`.
fn anisotropic_laplacian<T: Coefficient>(a: &AnisotropyMatrix<T>, u: &Polynomial<T>) -> Result<Polynomial<T>, SolveError> {
    let d = a.dim();
    let mut out = Polynomial::zero(u.dim());
    for i in 0..d {
        let di = u.partial_derivative(i, 1)?;
        for j in 0..d {
            let c = &a.entries()[i][j];
            if c.is_zero() {
                continue;
            }
            out = out.try_add(&di.partial_derivative(j, 1)?.scale(c))?;
        }
    }
    Ok(out)
}

/// `∇(div u)` assembled from second partials.
fn grad_div<T: Coefficient>(u: &PolyVector<T>) -> Result<PolyVector<T>, SolveError> {
    let d = u.dim();
    let components = (0..d)
        .map(|i| {
            (0..d).try_fold(Polynomial::zero(d), |acc, j| {
                acc.try_add(&u.component(j).partial_derivative(j, 1)?.partial_derivative(i, 1)?)
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyVector::new(components)?)
}

fn div<T: Coefficient>(u: &PolyVector<T>) -> Result<Polynomial<T>, SolveError> {
    (0..u.len()).try_fold(Polynomial::zero(u.dim()), |acc, j| {
        Ok(acc.try_add(&u.component(j).partial_derivative(j, 1)?)?)
    })
}

fn grad<T: Coefficient>(p: &Polynomial<T>) -> Result<PolyVector<T>, SolveError> {
    let components = (0..p.dim())
        .map(|i| p.partial_derivative(i, 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyVector::new(components)?)
}

fn rot<T: Coefficient>(u: &PolyVector<T>) -> Result<PolyVector<T>, SolveError> {
    let d = |c: usize, axis: usize| u.component(c).partial_derivative(axis, 1);
    Ok(PolyVector::new(vec![
        d(2, 1)?.try_sub(&d(1, 2)?)?,
        d(0, 2)?.try_sub(&d(2, 0)?)?,
        d(1, 0)?.try_sub(&d(0, 1)?)?,
    ])?)
}

fn lap<T: Coefficient>(u: &Polynomial<T>) -> Result<Polynomial<T>, SolveError> {
    (0..u.dim()).try_fold(Polynomial::zero(u.dim()), |acc, i| {
        Ok(acc.try_add(&u.partial_derivative(i, 2)?)?)
    })
}

fn vec_lap<T: Coefficient>(u: &PolyVector<T>) -> Result<PolyVector<T>, SolveError> {
    u.try_map(lap)
}

/// Residual of `solution` against `rhs` for the given family.
///
/// Floating-point candidates are evaluated exactly on their rational values,
/// so the residual is free of rounding in the check itself; only the
/// acceptance test (see [`ResidualReport::is_satisfied`]) applies a tolerance.
pub fn residual<T: Coefficient>(
    pde: &PdeSpec<T>,
    solution: &Solution<T>,
    rhs: &Field<T>,
) -> Result<ResidualReport<T>, SolveError> {
    let report = residual_in(&pde.to_exact()?, &solution.to_exact()?, &rhs.to_exact()?)?;
    Ok(ResidualReport {
        residual: report.residual.into_ring(),
        exact_zero: report.exact_zero,
        max_coeff_magnitude: report.max_coeff_magnitude,
        rhs_scale: report.rhs_scale,
        constraint_residuals: report
            .constraint_residuals
            .into_iter()
            .map(|(name, f)| (name, f.into_ring()))
            .collect(),
    })
}

fn residual_in<T: Coefficient>(
    pde: &PdeSpec<T>,
    solution: &Solution<T>,
    rhs: &Field<T>,
) -> Result<ResidualReport<T>, SolveError> {
    let family = pde.name();
    let rhs_scale = rhs.max_coefficient_magnitude();
    let scalar_pair = || match (solution, rhs) {
        (Solution::Scalar(u), Field::Scalar(f)) if u.dim() == f.dim() => Ok((u, f)),
        _ => Err(shape(family)),
    };
    let vector_pair = || match solution {
        Solution::Vector(u) => {
            let f = vector_rhs(family, rhs)?;
            same_shape(family, u, f)?;
            Ok((u, f))
        }
        _ => Err(shape(family)),
    };
    let scalar_report = |r: Polynomial<T>| ResidualReport::new(Field::Scalar(r), rhs_scale, Vec::new());

    match pde {
        PdeSpec::Helmholtz(params) => {
            let (u, f) = scalar_pair()?;
            let k_sq = params.k.clone() * params.k.clone();
            Ok(scalar_report(lap(u)?.try_add(&u.scale(&k_sq))?.try_sub(f)?))
        }
        PdeSpec::ZerothOrder(params) => {
            let (u, f) = scalar_pair()?;
            if params.op.dim() != u.dim() {
                return Err(shape(family));
            }
            let bu = params.op.apply(u)?;
            Ok(scalar_report(bu.try_add(&u.scale(&params.alpha))?.try_sub(f)?))
        }
        PdeSpec::Poisson => {
            let (u, f) = scalar_pair()?;
            Ok(scalar_report(lap(u)?.try_sub(f)?))
        }
        PdeSpec::Bilaplace(_) => {
            let (u, f) = scalar_pair()?;
            Ok(scalar_report(lap(&lap(u)?)?.try_sub(f)?))
        }
        PdeSpec::AnisotropicPoisson(a) => {
            let (u, f) = scalar_pair()?;
            if a.dim() != u.dim() {
                return Err(shape(family));
            }
            Ok(scalar_report(anisotropic_laplacian(a, u)?.try_sub(f)?))
        }
        PdeSpec::FactorizedAnisotropic(factors) => {
            let (u, f) = scalar_pair()?;
            if factors.iter().any(|a| a.dim() != u.dim()) {
                return Err(shape(family));
            }
            let applied = factors
                .iter()
                .try_fold(u.clone(), |g, a| anisotropic_laplacian(a, &g))?;
            Ok(scalar_report(applied.try_sub(f)?))
        }
        PdeSpec::Elastodynamics(params) => {
            let (u, f) = vector_pair()?;
            let one = T::one();
            let lame = one.clone().try_div(&(one - T::from_i64(2) * params.nu.clone()))?;
            let k2_sq = (params.omega.clone() * params.omega.clone() * params.rho_mass.clone()).try_div(&params.mu)?;
            let r = vec_lap(u)?
                .try_add(&grad_div(u)?.scale(&lame))?
                .try_add(&u.scale(&k2_sq))?
                .try_sub(f)?;
            Ok(ResidualReport::new(Field::Vector(r), rhs_scale, Vec::new()))
        }
        PdeSpec::Elastostatics(params) => {
            let (u, f) = vector_pair()?;
            let one = T::one();
            let lame = one.clone().try_div(&(one - T::from_i64(2) * params.nu.clone()))?;
            let r = vec_lap(u)?.try_add(&grad_div(u)?.scale(&lame))?.try_sub(f)?;
            Ok(ResidualReport::new(Field::Vector(r), rhs_scale, Vec::new()))
        }
        PdeSpec::Stokes(params) => {
            let (u, p) = match solution {
                Solution::Stokes { u, p } => (u, p),
                _ => return Err(shape(family)),
            };
            let f = vector_rhs(family, rhs)?;
            same_shape(family, u, f)?;
            if p.dim() != u.dim() {
                return Err(shape(family));
            }
            let r = vec_lap(u)?.scale(&params.mu).try_sub(&grad(p)?)?.try_sub(f)?;
            let div_u = div(u)?;
            Ok(ResidualReport::new(
                Field::Vector(r),
                rhs_scale,
                vec![("div_u".to_string(), Field::Scalar(div_u))],
            ))
        }
        PdeSpec::Maxwell { params, rho } => maxwell_residual(params, rho.as_ref(), solution, rhs),
    }
}

fn maxwell_residual<T: Coefficient>(
    params: &MaxwellParams<T>,
    rho: Option<&Polynomial<T>>,
    solution: &Solution<T>,
    rhs: &Field<T>,
) -> Result<ResidualReport<T>, SolveError> {
    let family = "maxwell";
    let i = T::imaginary_unit().ok_or(SolveError::ComplexRequired(family))?;
    let (e, h, potentials) = match solution {
        Solution::Maxwell { e, h, potentials } => (e, h, potentials),
        _ => return Err(shape(family)),
    };
    let j = vector_rhs(family, rhs)?;
    let three = |v: &PolyVector<T>| v.dim() == 3 && v.len() == 3;
    if !three(j) || !three(e) || !three(h) {
        return Err(shape(family));
    }
    let i_omega = i * params.omega.clone();
    let rho = match rho {
        Some(r) if r.dim() == 3 => r.clone(),
        Some(_) => return Err(shape(family)),
        None => div(j)?.try_div_scalar(&i_omega)?,
    };

    let ampere = e.scale(&(i_omega.clone() * params.eps.clone())).try_add(&rot(h)?)?.try_sub(j)?;
    let faraday = rot(e)?.try_sub(&h.scale(&(i_omega.clone() * params.mu.clone())))?;
    let gauss = div(e)?.scale(&params.eps).try_sub(&rho)?;
    let magnetic = div(h)?.scale(&params.mu);

    let mut constraints = vec![
        ("faraday".to_string(), Field::Vector(faraday)),
        ("gauss".to_string(), Field::Scalar(gauss)),
        ("div_h".to_string(), Field::Scalar(magnetic)),
    ];
    if let Some((a, phi)) = potentials {
        if !three(a) || phi.dim() != 3 {
            return Err(shape(family));
        }
        let gauge = div(a)?.try_sub(&phi.scale(&(i_omega * params.eps.clone() * params.mu.clone())))?;
        constraints.push(("lorenz_gauge".to_string(), Field::Scalar(gauge)));
    }
    let scale = j.max_coefficient_magnitude().max(rho.max_coefficient_magnitude());
    Ok(ResidualReport::new(Field::Vector(ampere), scale, constraints))
}

/// Whether `div J − iωρ` vanishes: exactly in exact rings, as an enclosure of
/// zero for intervals, within [`FLOAT_TOLERANCE`] otherwise.
pub fn validate_maxwell_source<T: Coefficient>(
    j: &PolyVector<T>,
    rho: &Polynomial<T>,
    params: &MaxwellParams<T>,
) -> Result<bool, SolveError> {
    if T::imaginary_unit().is_none() {
        return Err(SolveError::ComplexRequired("maxwell"));
    }
    if j.dim() != 3 || j.len() != 3 || rho.dim() != 3 {
        return Err(shape("maxwell"));
    }
    let i = T::Exact::imaginary_unit().ok_or(SolveError::ComplexRequired("maxwell"))?;
    let (j, rho) = (exact_vector(j)?, exact_poly(rho)?);
    let defect = div(&j)?.try_sub(&rho.scale(&(i * exact(&params.omega)?)))?;
    Ok(if T::EXACT {
        defect.is_zero()
    } else if T::ENCLOSURE {
        defect.terms().all(|(_, c)| c.contains_zero())
    } else {
        let scale = j.max_coefficient_magnitude().max(rho.max_coefficient_magnitude());
        within_tolerance(defect.max_coefficient_magnitude(), scale)
    })
}
