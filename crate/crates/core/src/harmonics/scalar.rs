use std::f64::consts::PI;

use super::{ModeIndex, Parity, SurfacePoint};
use crate::specfun::{assoc_legendre, assoc_legendre_over_sin};

/// `Y_n` with the two pieces of its surface gradient:
/// `grad_ξ Y = d_theta e_θ + d_phi_over_sin e_φ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarHarmonic {
    pub value: f64,
    pub d_theta: f64,
    pub d_phi_over_sin: f64,
}

pub(crate) fn normalization(l: usize, m: usize) -> f64 {
    let eps = if m == 0 { 1.0 } else { 2.0 };
    // (l-m)!/(l+m)!
    let ratio = ((l - m + 1)..=(l + m)).fold(1.0, |acc, k| acc / k as f64);
    (eps / (2.0 * PI)).sqrt() * ((2 * l + 1) as f64 * ratio / 2.0).sqrt()
}

/// `Y_n(θ, φ)`.
pub fn scalar_y(n: &ModeIndex, p: &SurfacePoint) -> f64 {
    scalar_y_full(n, p).value
}

pub fn scalar_y_full(n: &ModeIndex, p: &SurfacePoint) -> ScalarHarmonic {
    let (l, m) = (n.l(), n.m());
    let x = p.theta.cos().clamp(-1.0, 1.0);
    let c = normalization(l, m);
    // x is clamped into [-1, 1], so the Legendre calls cannot fail
    let (pv, pd) = assoc_legendre(l, m, x).expect("clamped argument");
    let mphi = m as f64 * p.phi;
    let (s, co) = mphi.sin_cos();
    let (f, df) = match n.parity() {
        Parity::Even => (co, -(m as f64) * s),
        Parity::Odd => (s, m as f64 * co),
    };
    let d_phi_over_sin = if m == 0 {
        0.0
    } else {
        c * assoc_legendre_over_sin(l, m, x).expect("clamped argument") * df
    };
    ScalarHarmonic { value: c * pv * f, d_theta: c * pd * f, d_phi_over_sin }
}
