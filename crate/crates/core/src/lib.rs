//! Closed-form polynomial particular solutions of constant-coefficient PDEs.
//!
//! Given a polynomial right-hand side, the solvers return a polynomial
//! solution without assembling or inverting any matrix:
//!
//! * operators with an invertible zeroth-order part (Helmholtz, `B(∂) + α`,
//!   time-harmonic elastodynamics and Maxwell) are inverted by a Neumann series
//!   that terminates because derivatives are nilpotent on polynomials
//!   ([`helmholtz`]);
//! * operators without one (Poisson, bilaplacian, elastostatics, Stokes,
//!   anisotropic Poisson and products of anisotropic Laplacians) are inverted
//!   per homogeneous part with a radial ansatz `Σ c_ℓ r^{2ℓ+2} Δ^ℓ f`
//!   ([`laplace`]).
//!
//! Everything is generic over the coefficient ring ([`ring::Coefficient`]):
//! `f64`, exact [`ring::Rational`], outward-rounded [`ring::Interval`] and
//! complex numbers over `f64` or rationals. [`verify`] applies the forward
//! operators to a candidate solution and reports the residual.
//!
//! ```
//! use polysol::helmholtz::{solve_helmholtz, HelmholtzParams};
//! use polysol::poly::Polynomial;
//!
//! let f = Polynomial::monomial(&[2, 3, 1], 1.0);
//! let u = solve_helmholtz(&f, &HelmholtzParams { k: 2.0 }).unwrap();
//! assert_eq!(u.to_string(), "0.375*y*z - 0.125*y^3*z - 0.375*x^2*y*z + 0.25*x^2*y^3*z");
//! ```

pub mod error;
pub mod helmholtz;
pub mod laplace;
pub mod pde;
pub mod poly;
pub mod ring;
pub mod verify;

pub use error::SolveError;
pub use pde::{solve, Field, PdeSpec, Solution};
pub use poly::{Degree, MultiIndex, PdoSpec, PolyVector, Polynomial, RenderStyle};
pub use ring::{Coefficient, Complex, Interval, Mode, Rational, Scalar};
