use std::cmp::Ordering;

use super::{radial_sum, RecursionCoefficients};
use crate::error::SolveError;
use crate::poly::{MultiIndex, PdoSpec, Polynomial};
use crate::ring::Coefficient;

/// Symmetric invertible conductivity matrix `A` of `Δ_A = div(A∇·)`.
///
/// Construction checks symmetry exactly, computes `A⁻¹`, and for ordered
/// rings requires every pivot of an unpivoted elimination (equivalently every
/// leading principal minor) to be provably positive.
#[derive(Debug, Clone, PartialEq)]
pub struct AnisotropyMatrix<T> {
    entries: Vec<Vec<T>>,
    inverse: Vec<Vec<T>>,
}

impl<T: Coefficient> AnisotropyMatrix<T> {
    pub fn new(entries: Vec<Vec<T>>) -> Result<Self, SolveError> {
        let d = entries.len();
        if d == 0 || entries.iter().any(|row| row.len() != d) {
            return Err(SolveError::NotSquare);
        }
        for i in 0..d {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(SolveError::NotSymmetric);
                }
            }
        }
        let inverse = invert(&entries)?;
        if T::ORDERED && !unpivoted_pivots_positive(&entries)? {
            return Err(SolveError::NotPositiveDefinite);
        }
        Ok(AnisotropyMatrix { entries, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(vec![T::one(); dim]).expect("identity is SPD")
    }

    pub fn diagonal(diag: Vec<T>) -> Result<Self, SolveError> {
        let d = diag.len();
        let entries = diag
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                let mut row = vec![T::zero(); d];
                row[i] = a;
                row
            })
            .collect();
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<T>] {
        &self.entries
    }

    pub fn inverse(&self) -> &[Vec<T>] {
        &self.inverse
    }

    /// `r_A² = rᵀ A⁻¹ r` as a quadratic polynomial.
    pub fn metric(&self) -> Polynomial<T> {
        let d = self.dim();
        let terms = self.inverse.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, b)| (MultiIndex::unit(d, i).product(&MultiIndex::unit(d, j)), b.clone()))
        });
        Polynomial::from_terms(d, terms).expect("keys have length d")
    }

    /// `Δ_A = Σ A_ij ∂_i ∂_j`.
    pub fn operator(&self) -> PdoSpec<T> {
        PdoSpec::second_order(&self.entries).expect("square matrix")
    }
}

/// Gauss-Jordan elimination taking the first pivot that is provably nonzero.
fn invert<T: Coefficient>(a: &[Vec<T>]) -> Result<Vec<Vec<T>>, SolveError> {
    let d = a.len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut inv: Vec<Vec<T>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    for col in 0..d {
        let pivot_row = (col..d)
            .find(|&r| !m[r][col].contains_zero())
            .ok_or(SolveError::SingularMatrix)?;
        m.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for j in 0..d {
            m[col][j] = m[col][j].try_div(&pivot)?;
            inv[col][j] = inv[col][j].try_div(&pivot)?;
        }
        for r in 0..d {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..d {
                m[r][j] = m[r][j].clone() - factor.clone() * m[col][j].clone();
                inv[r][j] = inv[r][j].clone() - factor.clone() * inv[col][j].clone();
            }
        }
    }
    Ok(inv)
}

fn unpivoted_pivots_positive<T: Coefficient>(a: &[Vec<T>]) -> Result<bool, SolveError> {
    let d = a.len();
    let mut m = a.to_vec();
    for k in 0..d {
        if m[k][k].real_sign() != Some(Ordering::Greater) {
            return Ok(false);
        }
        for r in k + 1..d {
            let factor = m[r][k].try_div(&m[k][k])?;
            for j in k..d {
                m[r][j] = m[r][j].clone() - factor.clone() * m[k][j].clone();
            }
        }
    }
    Ok(true)
}

/// `u` with `Δ_A u = f`: per homogeneous part `h_n`,
/// `u = Σ c_ℓ r_A^{2ℓ+2} Δ_A^ℓ h_n` with the Poisson recursion coefficients.
pub fn solve_anisotropic_poisson<T: Coefficient>(
    f: &Polynomial<T>,
    a: &AnisotropyMatrix<T>,
) -> Result<Polynomial<T>, SolveError> {
    if a.dim() != f.dim() {
        return Err(SolveError::Dimension {
            family: "anisotropic-poisson",
            expected: a.dim(),
            found: f.dim(),
        });
    }
    let metric = a.metric();
    let op = a.operator();
    let mut u = Polynomial::zero(f.dim());
    for (n, h) in f.homogeneous_decomposition() {
        let mut chain = vec![h];
        loop {
            let next = op.apply(chain.last().expect("nonempty"))?;
            if next.is_zero() {
                break;
            }
            chain.push(next);
        }
        let coeffs = RecursionCoefficients::poisson(n, f.dim(), chain.len() as u32 - 1);
        u = &u + &radial_sum(&chain, &metric, 1, &coeffs);
    }
    Ok(u)
}

/// `g` with `Δ_{A_1} ⋯ Δ_{A_k} g = f`, by solving the anisotropic Poisson
/// problems one after another. The operators commute, so the order of the
/// factors does not affect the residual.
pub fn solve_factorized_anisotropic<T: Coefficient>(
    f: &Polynomial<T>,
    factors: &[AnisotropyMatrix<T>],
) -> Result<Polynomial<T>, SolveError> {
    if factors.is_empty() {
        return Err(SolveError::EmptyFactorList);
    }
    factors
        .iter()
        .try_fold(f.clone(), |g, a| solve_anisotropic_poisson(&g, a))
}

/// Factors `diag(A_i, A_i, 1)` of `E(ξ) = Π (A_i(ξ₁² + ξ₂²) + ξ₃²)` for a
/// transversely isotropic medium with symmetry axis `x₃`.
pub fn transversely_isotropic_factors<T: Coefficient>(
    constants: [T; 3],
) -> Result<Vec<AnisotropyMatrix<T>>, SolveError> {
    constants
        .into_iter()
        .map(|a| AnisotropyMatrix::diagonal(vec![a.clone(), a, T::one()]))
        .collect()
}
