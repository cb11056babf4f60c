//! Problem descriptions shared by the solvers and the residual oracles.

use crate::error::SolveError;
use crate::helmholtz::{
    solve_elastodynamics, solve_helmholtz, solve_maxwell, solve_zeroth_order, ElastodynamicsParams, HelmholtzParams,
    MaxwellParams, MaxwellSolution, ZerothOrderParams,
};
use crate::laplace::{
    solve_anisotropic_poisson, solve_bilaplace, solve_elastostatics, solve_factorized_anisotropic, solve_poisson,
    solve_stokes, AnisotropyMatrix, BilaplaceMethod, ElastostaticsParams, StokesParams, StokesSolution,
};
use crate::poly::{PolyVector, Polynomial, RenderStyle};
use crate::ring::Coefficient;

/// A PDE family with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum PdeSpec<T> {
    Helmholtz(HelmholtzParams<T>),
    ZerothOrder(ZerothOrderParams<T>),
    Elastodynamics(ElastodynamicsParams<T>),
    /// `rho` defaults to `div J / (iω)`.
    Maxwell {
        params: MaxwellParams<T>,
        rho: Option<Polynomial<T>>,
    },
    Poisson,
    Bilaplace(BilaplaceMethod),
    Elastostatics(ElastostaticsParams<T>),
    Stokes(StokesParams<T>),
    AnisotropicPoisson(AnisotropyMatrix<T>),
    FactorizedAnisotropic(Vec<AnisotropyMatrix<T>>),
}

impl<T> PdeSpec<T> {
    pub fn name(&self) -> &'static str {
        match self {
            PdeSpec::Helmholtz(_) => "helmholtz",
            PdeSpec::ZerothOrder(_) => "zeroth-order",
            PdeSpec::Elastodynamics(_) => "elastodynamics",
            PdeSpec::Maxwell { .. } => "maxwell",
            PdeSpec::Poisson => "poisson",
            PdeSpec::Bilaplace(_) => "bilaplace",
            PdeSpec::Elastostatics(_) => "elastostatics",
            PdeSpec::Stokes(_) => "stokes",
            PdeSpec::AnisotropicPoisson(_) => "anisotropic-poisson",
            PdeSpec::FactorizedAnisotropic(_) => "factorized-anisotropic",
        }
    }

    /// Whether the unknown and the right-hand side are vector fields.
    pub fn is_vector(&self) -> bool {
        matches!(
            self,
            PdeSpec::Elastodynamics(_) | PdeSpec::Maxwell { .. } | PdeSpec::Elastostatics(_) | PdeSpec::Stokes(_)
        )
    }
}

/// A scalar or vector polynomial field.
#[derive(Debug, Clone, PartialEq)]
pub enum Field<T> {
    Scalar(Polynomial<T>),
    Vector(PolyVector<T>),
}

impl<T: Coefficient> Field<T> {
    pub fn is_zero(&self) -> bool {
        match self {
            Field::Scalar(p) => p.is_zero(),
            Field::Vector(v) => v.is_zero(),
        }
    }

    pub fn components(&self) -> &[Polynomial<T>] {
        match self {
            Field::Scalar(p) => std::slice::from_ref(p),
            Field::Vector(v) => v.components(),
        }
    }

    pub fn max_coefficient_magnitude(&self) -> f64 {
        self.components()
            .iter()
            .map(Polynomial::max_coefficient_magnitude)
            .fold(0.0, f64::max)
    }

    pub(crate) fn all_contain_zero(&self) -> bool {
        self.components()
            .iter()
            .all(|p| p.terms().all(|(_, c)| c.contains_zero()))
    }

    pub fn render(&self, style: RenderStyle) -> String {
        match self {
            Field::Scalar(p) => p.render(style),
            Field::Vector(v) => v.render(style),
        }
    }
}

impl<T: Coefficient> std::fmt::Display for Field<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(RenderStyle::Ascii))
    }
}

impl<T> From<Polynomial<T>> for Field<T> {
    fn from(p: Polynomial<T>) -> Self {
        Field::Scalar(p)
    }
}

impl<T> From<PolyVector<T>> for Field<T> {
    fn from(v: PolyVector<T>) -> Self {
        Field::Vector(v)
    }
}

/// A candidate solution.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution<T> {
    Scalar(Polynomial<T>),
    Vector(PolyVector<T>),
    Stokes {
        u: PolyVector<T>,
        p: Polynomial<T>,
    },
    /// Potentials `(A, φ)` are optional; with them the gauge is checked too.
    Maxwell {
        e: PolyVector<T>,
        h: PolyVector<T>,
        potentials: Option<(PolyVector<T>, Polynomial<T>)>,
    },
}

impl<T> From<Polynomial<T>> for Solution<T> {
    fn from(p: Polynomial<T>) -> Self {
        Solution::Scalar(p)
    }
}

impl<T> From<PolyVector<T>> for Solution<T> {
    fn from(v: PolyVector<T>) -> Self {
        Solution::Vector(v)
    }
}

impl<T> From<StokesSolution<T>> for Solution<T> {
    fn from(s: StokesSolution<T>) -> Self {
        Solution::Stokes { u: s.u, p: s.p }
    }
}

impl<T> From<MaxwellSolution<T>> for Solution<T> {
    fn from(s: MaxwellSolution<T>) -> Self {
        Solution::Maxwell {
            e: s.e,
            h: s.h,
            potentials: Some((s.a, s.phi)),
        }
    }
}

/// Solve `pde` for the right-hand side `rhs`.
pub fn solve<T: Coefficient>(pde: &PdeSpec<T>, rhs: &Field<T>) -> Result<Solution<T>, SolveError> {
    let family = pde.name();
    let scalar = || match rhs {
        Field::Scalar(f) => Ok(f),
        Field::Vector(_) => Err(SolveError::ShapeMismatch(family)),
    };
    let vector = || match rhs {
        Field::Vector(f) => Ok(f),
        Field::Scalar(_) => Err(SolveError::ShapeMismatch(family)),
    };
    Ok(match pde {
        PdeSpec::Helmholtz(p) => solve_helmholtz(scalar()?, p)?.into(),
        PdeSpec::ZerothOrder(p) => solve_zeroth_order(scalar()?, p)?.into(),
        PdeSpec::Elastodynamics(p) => solve_elastodynamics(vector()?, p)?.into(),
        PdeSpec::Maxwell { params, rho } => solve_maxwell(vector()?, params, rho.as_ref())?.into(),
        PdeSpec::Poisson => solve_poisson(scalar()?)?.into(),
        PdeSpec::Bilaplace(method) => solve_bilaplace(scalar()?, *method)?.into(),
        PdeSpec::Elastostatics(p) => solve_elastostatics(vector()?, p)?.into(),
        PdeSpec::Stokes(p) => solve_stokes(vector()?, p)?.into(),
        PdeSpec::AnisotropicPoisson(a) => solve_anisotropic_poisson(scalar()?, a)?.into(),
        PdeSpec::FactorizedAnisotropic(factors) => solve_factorized_anisotropic(scalar()?, factors)?.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::residual;

    #[test]
    fn dispatch_matches_direct_call() {
        let f = Polynomial::monomial(&[2, 3, 1], 1.0);
        let pde = PdeSpec::Helmholtz(HelmholtzParams { k: 2.0 });
        let sol = solve(&pde, &f.clone().into()).unwrap();
        assert_eq!(sol, Solution::Scalar(solve_helmholtz(&f, &HelmholtzParams { k: 2.0 }).unwrap()));
        assert!(residual(&pde, &sol, &f.into()).unwrap().exact_zero);
    }

    #[test]
    fn rhs_shape_checked() {
        let f = Polynomial::constant(2, 1.0);
        let pde = PdeSpec::Stokes(StokesParams { mu: 1.0 });
        assert_eq!(solve(&pde, &f.into()), Err(SolveError::ShapeMismatch("stokes")));
    }
}
