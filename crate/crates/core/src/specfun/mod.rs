//! Double-precision special functions: spherical Bessel functions of the
//! first kind for complex argument, associated Legendre functions and
//! Gauss-Legendre quadrature.

mod bessel;
mod legendre;
mod quadrature;

pub use bessel::{sph_bessel_j, sph_bessel_j_array, sph_bessel_j_deriv, sph_bessel_j_with_deriv};
pub use legendre::{assoc_legendre, assoc_legendre_over_sin, legendre_p};
pub use quadrature::{gauss_legendre, QuadratureRule};

/// Complex argument and value type of the Bessel routines.
pub type ComplexValue = num_complex::Complex64;
