//! Operators without a zeroth-order term.
//!
//! A homogeneous right-hand side `h_n` of degree `n` is inverted with the
//! radial ansatz `u = Σ_ℓ c_ℓ r^{2ℓ+2} Δ^ℓ h_n`; Euler's identity
//! `r·∇h_n = n h_n` turns `Δu = h_n` into the scalar recursion in
//! [`RecursionCoefficients`]. General polynomials are split into homogeneous
//! parts first. Solutions are particular representatives: any harmonic
//! (respectively biharmonic) polynomial may be added.

mod anisotropic;
mod recursion;

pub use anisotropic::{
    solve_anisotropic_poisson, solve_factorized_anisotropic, transversely_isotropic_factors, AnisotropyMatrix,
};
pub use recursion::{gamma, RecursionCoefficients};

use crate::error::SolveError;
use crate::helmholtz::{require_nonzero, require_poisson_ratio, require_positive};
use crate::poly::{MultiIndex, PolyVector, Polynomial};
use crate::ring::Coefficient;

/// `r² = Σ x_i²`.
pub fn radius_squared<T: Coefficient>(dim: usize) -> Polynomial<T> {
    let terms = (0..dim).map(|i| (MultiIndex::unit(dim, i).product(&MultiIndex::unit(dim, i)), T::one()));
    Polynomial::from_terms(dim, terms).expect("keys have length dim")
}

/// `Σ_ℓ c_ℓ metric^{first_power + ℓ} chain[ℓ]`.
pub(crate) fn radial_sum<T: Coefficient>(
    chain: &[Polynomial<T>],
    metric: &Polynomial<T>,
    first_power: u32,
    coeffs: &RecursionCoefficients,
) -> Polynomial<T> {
    debug_assert_eq!(chain.len(), coeffs.len());
    let mut power = metric.pow(first_power);
    let mut u = Polynomial::zero(metric.dim());
    for (term, c) in chain.iter().zip(coeffs.as_slice()) {
        u = &u + &(&power * term).scale(&T::from_rational(c));
        power = &power * metric;
    }
    u
}

/// `u` with `Δu = h` for homogeneous `h` of degree `n`; `u` is homogeneous of
/// degree `n + 2`.
pub fn solve_poisson_homogeneous<T: Coefficient>(h: &Polynomial<T>) -> Result<Polynomial<T>, SolveError> {
    if h.is_zero() {
        return Ok(h.clone());
    }
    let n = h.homogeneous_degree().ok_or(SolveError::NotHomogeneous)?;
    let chain = h.laplacian_chain();
    let coeffs = RecursionCoefficients::poisson(n, h.dim(), chain.len() as u32 - 1);
    Ok(radial_sum(&chain, &radius_squared(h.dim()), 1, &coeffs))
}

/// `u` with `Δu = f`, summed over the homogeneous parts of `f`.
/// `deg u ≤ deg f + 2`.
pub fn solve_poisson<T: Coefficient>(f: &Polynomial<T>) -> Result<Polynomial<T>, SolveError> {
    f.homogeneous_decomposition()
        .into_iter()
        .try_fold(Polynomial::zero(f.dim()), |u, (_, h)| Ok(&u + &solve_poisson_homogeneous(&h)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BilaplaceMethod {
    /// Two Poisson solves.
    #[default]
    Iterated,
    /// One radial series `Σ c_ℓ r^{2ℓ+4} Δ^ℓ h` per homogeneous part.
    Direct,
}

/// `u` with `Δ²u = f`. The two methods generally return different
/// solutions; their difference is biharmonic.
pub fn solve_bilaplace<T: Coefficient>(
    f: &Polynomial<T>,
    method: BilaplaceMethod,
) -> Result<Polynomial<T>, SolveError> {
    match method {
        BilaplaceMethod::Iterated => solve_poisson(&solve_poisson(f)?),
        BilaplaceMethod::Direct => {
            let metric = radius_squared(f.dim());
            let mut u = Polynomial::zero(f.dim());
            for (n, h) in f.homogeneous_decomposition() {
                let chain = h.laplacian_chain();
                let coeffs = RecursionCoefficients::bilaplace(n, f.dim(), chain.len() as u32 - 1);
                u = &u + &radial_sum(&chain, &metric, 2, &coeffs);
            }
            Ok(u)
        }
    }
}

/// Isotropic linear elastic medium. `mu` scales the body force `μf` and does
/// not enter the displacement.
#[derive(Debug, Clone, PartialEq)]
pub struct ElastostaticsParams<T> {
    pub nu: T,
    pub mu: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StokesParams<T> {
    /// Dynamic viscosity.
    pub mu: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StokesSolution<T> {
    pub u: PolyVector<T>,
    pub p: Polynomial<T>,
}

fn vector_count<T: Coefficient>(family: &'static str, f: &PolyVector<T>) -> Result<(), SolveError> {
    if f.len() != f.dim() {
        return Err(SolveError::ComponentCount {
            family,
            expected: f.dim(),
            found: f.len(),
        });
    }
    Ok(())
}

/// `Δu + (1/(1−2ν))∇(div u) = f` through the Galerkin vector:
/// `Δ²g = f/(2(1−ν))` (iterated bilaplace), `u = 2(1−ν)Δg − ∇(div g)`.
pub fn solve_elastostatics<T: Coefficient>(
    f: &PolyVector<T>,
    params: &ElastostaticsParams<T>,
) -> Result<PolyVector<T>, SolveError> {
    require_poisson_ratio(&params.nu)?;
    require_positive("mu", &params.mu)?;
    vector_count("elastostatics", f)?;
    let two_one_minus_nu = T::from_i64(2) * (T::one() - params.nu.clone());
    let g = f
        .try_div_scalar(&two_one_minus_nu)?
        .try_map(|c| solve_bilaplace(c, BilaplaceMethod::Iterated))?;
    let grad_div = g.divergence()?.gradient();
    Ok(g.laplacian(1).scale(&two_one_minus_nu).try_sub(&grad_div)?)
}

/// Stokes flow `μΔu − ∇p = f`, `div u = 0`:
/// `Δ²g = f/μ` (iterated bilaplace), `u = Δg − ∇(div g)`, `p = −μΔ(div g)`.
pub fn solve_stokes<T: Coefficient>(
    f: &PolyVector<T>,
    params: &StokesParams<T>,
) -> Result<StokesSolution<T>, SolveError> {
    require_nonzero("mu", &params.mu)?;
    vector_count("stokes", f)?;
    let g = f
        .try_div_scalar(&params.mu)?
        .try_map(|c| solve_bilaplace(c, BilaplaceMethod::Iterated))?;
    let div_g = g.divergence()?;
    let u = g.laplacian(1).try_sub(&div_g.gradient())?;
    let p = -div_g.laplacian(1).scale(&params.mu);
    Ok(StokesSolution { u, p })
}
