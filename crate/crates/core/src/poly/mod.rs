//! Sparse multivariate polynomials and the calculus operators the solvers are
//! built from.

mod multi_index;
mod pdo;
mod polynomial;
mod render;
mod vector;

use thiserror::Error;

pub use multi_index::MultiIndex;
pub use pdo::PdoSpec;
pub use polynomial::{Degree, Polynomial};
pub use render::RenderStyle;
pub use vector::PolyVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("exponent tuple has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("curl needs three components in three dimensions, got {components} in dimension {dim}")]
    CurlNeeds3D { dim: usize, components: usize },
    #[error("vector field has no components")]
    EmptyVector,
    #[error("evaluation point has {found} coordinates, expected {expected}")]
    PointLength { expected: usize, found: usize },
}
