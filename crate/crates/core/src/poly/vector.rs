use super::{PolyError, Polynomial};
use crate::ring::{Coefficient, RingError};

/// Fixed-length tuple of polynomials sharing one ambient dimension
/// (displacements, velocities, currents, potentials).
#[derive(Clone, PartialEq, Debug)]
pub struct PolyVector<T> {
    components: Vec<Polynomial<T>>,
}

impl<T: Coefficient> PolyVector<T> {
    pub fn new(components: Vec<Polynomial<T>>) -> Result<Self, PolyError> {
        let first = components.first().ok_or(PolyError::EmptyVector)?;
        if let Some(bad) = components.iter().find(|c| c.dim() != first.dim()) {
            return Err(PolyError::DimensionMismatch {
                left: first.dim(),
                right: bad.dim(),
            });
        }
        Ok(PolyVector { components })
    }

    pub(crate) fn from_components_unchecked(components: Vec<Polynomial<T>>) -> Self {
        debug_assert!(!components.is_empty());
        PolyVector { components }
    }

    pub fn zero(dim: usize, count: usize) -> Self {
        PolyVector {
            components: vec![Polynomial::zero(dim); count],
        }
    }

    pub fn dim(&self) -> usize {
        self.components[0].dim()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Polynomial<T>] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial<T>> {
        self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial<T> {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn map(&self, f: impl FnMut(&Polynomial<T>) -> Polynomial<T>) -> Self {
        PolyVector {
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn try_map<E>(&self, f: impl FnMut(&Polynomial<T>) -> Result<Polynomial<T>, E>) -> Result<Self, E> {
        Ok(PolyVector {
            components: self.components.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    fn check_shape(&self, other: &Self) -> Result<(), PolyError> {
        if self.len() != other.len() {
            return Err(PolyError::ComponentCount {
                expected: self.len(),
                found: other.len(),
            });
        }
        if self.dim() != other.dim() {
            return Err(PolyError::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_shape(other)?;
        Ok(PolyVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_shape(other)?;
        Ok(PolyVector {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn try_div_scalar(&self, c: &T) -> Result<Self, RingError> {
        self.try_map(|p| p.try_div_scalar(c))
    }

    /// Componentwise `Δ^iterations`.
    pub fn laplacian(&self, iterations: u32) -> Self {
        self.map(|p| p.laplacian(iterations))
    }

    /// `Σ ∂_i v_i`; requires one component per dimension.
    pub fn divergence(&self) -> Result<Polynomial<T>, PolyError> {
        if self.len() != self.dim() {
            return Err(PolyError::ComponentCount {
                expected: self.dim(),
                found: self.len(),
            });
        }
        let mut div = Polynomial::zero(self.dim());
        for (axis, c) in self.components.iter().enumerate() {
            div = &div + &c.partial_derivative(axis, 1)?;
        }
        Ok(div)
    }

    /// `(∂₂v₃ − ∂₃v₂, ∂₃v₁ − ∂₁v₃, ∂₁v₂ − ∂₂v₁)`; three components in three dimensions only.
    pub fn curl(&self) -> Result<Self, PolyError> {
        if self.len() != 3 || self.dim() != 3 {
            return Err(PolyError::CurlNeeds3D {
                dim: self.dim(),
                components: self.len(),
            });
        }
        let d = |comp: usize, axis: usize| self.components[comp].partial_derivative(axis, 1);
        Ok(PolyVector {
            components: vec![&d(2, 1)? - &d(1, 2)?, &d(0, 2)? - &d(2, 0)?, &d(1, 0)? - &d(0, 1)?],
        })
    }

    /// Largest coefficient magnitude over all components.
    pub fn max_coefficient_magnitude(&self) -> f64 {
        self.components
            .iter()
            .map(Polynomial::max_coefficient_magnitude)
            .fold(0.0, f64::max)
    }
}
