//! Electromagnetic Steklov eigenvalues of the penalized curl-curl operator on
//! the unit ball of R^3, the classical scalar Steklov spectrum of the n-ball,
//! and the special-function layer both are built on.
//!
//! Module map:
//!
//! * [`specfun`]: spherical Bessel functions for complex argument, associated
//!   Legendre functions, Gauss-Legendre rules.
//! * [`jet`]: truncated derivative arithmetic used to differentiate radial
//!   profiles exactly.
//! * [`harmonics`]: scalar and vector spherical harmonics, their calculus and
//!   finite-difference verifiers.
//! * [`steklov_ball`]: the two eigenvalue families, eigenfields, residual
//!   verifiers and the modal boundary solver.
//! * [`dirichlet_exclusion`]: resonance root lists and the exclusion check.
//! * [`classical_steklov`]: the scalar Steklov spectrum of the n-ball.
//! * [`sweep`]: parameter sweeps over `(l, k^2)` grids, parallel when the
//!   `parallel` feature is on.

pub mod classical_steklov;
pub mod dirichlet_exclusion;
mod error;
pub mod harmonics;
pub mod jet;
pub mod specfun;
pub mod steklov_ball;
pub mod sweep;

pub use error::{Error, Result};
pub use num_complex::Complex64;
