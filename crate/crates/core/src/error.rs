use thiserror::Error;

use crate::poly::PolyError;
use crate::ring::RingError;

/// Precondition failures of the solvers and the residual oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("zeroth-order term vanishes; use Poisson solver")]
    VanishingZerothOrder,
    #[error("operator has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("{family} expects {expected} components, got {found}")]
    ComponentCount {
        family: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{family} requires dimension {expected}, got {found}")]
    Dimension {
        family: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("factor list is empty")]
    EmptyFactorList,
    #[error("source not charge-conserving")]
    ChargeNotConserved,
    #[error("{0} requires a coefficient ring with an imaginary unit")]
    ComplexRequired(&'static str),
    #[error("non-finite coefficient {0}")]
    NonFinite(String),
    #[error("field shape does not match the {0} problem")]
    ShapeMismatch(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
