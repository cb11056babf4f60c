use super::polynomial::falling_factorial;
use super::{MultiIndex, PolyError, Polynomial};
use crate::ring::Coefficient;

/// Constant-coefficient differential operator `B(∂)`.
///
/// The symbol `B` is a polynomial whose variable `ξ_i` stands for `∂_i`: a term
/// `c ξ^α` contributes `c ∂^α`.
#[derive(Clone, PartialEq, Debug)]
pub struct PdoSpec<T> {
    symbol: Polynomial<T>,
}

impl<T: Coefficient> PdoSpec<T> {
    pub fn new(symbol: Polynomial<T>) -> Self {
        PdoSpec { symbol }
    }

    /// `Δ = Σ ∂_i²`.
    pub fn laplacian(dim: usize) -> Self {
        let terms = (0..dim).map(|i| (MultiIndex::unit(dim, i).product(&MultiIndex::unit(dim, i)), T::one()));
        PdoSpec::new(Polynomial::from_terms(dim, terms).expect("keys have length dim"))
    }

    /// `Σ_ij a_ij ∂_i ∂_j` for a square matrix given by rows.
    pub fn second_order(matrix: &[Vec<T>]) -> Result<Self, PolyError> {
        let dim = matrix.len();
        let mut terms = Vec::with_capacity(dim * dim);
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != dim {
                return Err(PolyError::ComponentCount {
                    expected: dim,
                    found: row.len(),
                });
            }
            for (j, a) in row.iter().enumerate() {
                terms.push((MultiIndex::unit(dim, i).product(&MultiIndex::unit(dim, j)), a.clone()));
            }
        }
        Polynomial::from_terms(dim, terms).map(PdoSpec::new)
    }

    pub fn symbol(&self) -> &Polynomial<T> {
        &self.symbol
    }

    pub fn dim(&self) -> usize {
        self.symbol.dim()
    }

    pub fn has_zero_constant_term(&self) -> bool {
        self.symbol.constant_term().is_zero()
    }

    /// `Σ_α c_α ∂^α p`.
    pub fn apply(&self, p: &Polynomial<T>) -> Result<Polynomial<T>, PolyError> {
        if self.dim() != p.dim() {
            return Err(PolyError::DimensionMismatch {
                left: self.dim(),
                right: p.dim(),
            });
        }
        let mut terms = Vec::new();
        for (beta, b) in p.terms() {
            for (alpha, c) in self.symbol.terms() {
                let Some(lowered) = beta.checked_sub(alpha) else {
                    continue;
                };
                let factor: u128 = beta
                    .exponents()
                    .iter()
                    .zip(alpha.exponents())
                    .map(|(&e, &k)| falling_factorial(e, k))
                    .product();
                terms.push((lowered, (c.clone() * b.clone()).mul_u128(factor)));
            }
        }
        Polynomial::from_terms(p.dim(), terms)
    }

    /// `B(∂)^times p`, stopping early once the result vanishes.
    pub fn apply_repeated(&self, p: &Polynomial<T>, times: u32) -> Result<Polynomial<T>, PolyError> {
        let mut q = p.clone();
        for _ in 0..times {
            if q.is_zero() {
                break;
            }
            q = self.apply(&q)?;
        }
        Ok(q)
    }
}
