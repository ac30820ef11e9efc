//! Weak form of the penalized eigenproblem checked by quadrature:
//! `∫_B (|curl E|^2 - k^2 |E|^2 + θ |div E|^2) dx + λ ∫_Γ |E|^2 dσ = 0`.

use super::mode::SteklovMode;
use crate::harmonics::{vector_a_all, SurfaceRule, VectorHarmonics};
use crate::specfun::gauss_legendre;
use crate::{Error, Result};

/// Largest relative change of the four integrals tolerated when both
/// quadrature orders grow by [`REFINEMENT_STEP`].
pub const COARSENESS_LIMIT: f64 = 0.1;
pub const REFINEMENT_STEP: usize = 4;

/// The four integrals of the identity, in order: curl, mass, divergence,
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakTerms {
    pub terms: [f64; 4],
}

impl WeakTerms {
    /// Sum of the terms over the largest of them; zero for the zero field.
    pub fn relative_error(&self) -> f64 {
        let scale = self.terms.iter().map(|t| t.abs()).fold(0.0, f64::max);
        if scale == 0.0 {
            return 0.0;
        }
        self.terms.iter().sum::<f64>().abs() / scale
    }
}

/// Quadrature orders that resolve the mode comfortably.
pub fn default_orders(mode: &SteklovMode) -> (usize, usize) {
    let k = mode.k2().abs().sqrt();
    let radial = (2 * mode.l() + 4).max(24 + (2.0 * k).ceil() as usize);
    (radial, 2 * mode.l() + 4)
}

/// Evaluates the four integrals with `radial_order` Gauss nodes on `[0, 1]`
/// (weight `r^2` applied explicitly) times the surface rule of degree
/// `surface_order`.
pub fn weak_terms(mode: &SteklovMode, radial_order: usize, surface_order: usize) -> Result<WeakTerms> {
    let surface = SurfaceRule::for_degree(surface_order);
    let n = mode.mode();
    let harmonics: Vec<(VectorHarmonics, f64)> =
        surface.points().iter().map(|(p, w)| (vector_a_all(&n, p), *w)).collect();
    let radial = gauss_legendre(radial_order.max(1));
    let mut curl = 0.0;
    let mut mass = 0.0;
    let mut div = 0.0;
    for (r, wr) in radial.mapped(0.0, 1.0) {
        let f = mode.modal_fields(r)?;
        let w = wr * r * r;
        for (h, ws) in &harmonics {
            let e = h.combine(f.field);
            let c = h.combine(f.curl);
            let d = f.phi * h.y;
            curl += w * ws * c.dot(&c);
            mass += w * ws * e.dot(&e);
            div += w * ws * d * d;
        }
    }
    let f1 = mode.modal_fields(1.0)?;
    let boundary: f64 = harmonics
        .iter()
        .map(|(h, ws)| {
            let e = h.combine(f1.field);
            ws * e.dot(&e)
        })
        .sum();
    Ok(WeakTerms { terms: [curl, -mode.k2() * mass, mode.theta() * div, mode.lambda() * boundary] })
}

/// Relative error of the weak identity. Fails with
/// [`Error::QuadratureTooCoarse`] when raising both orders changes one of the
/// integrals by more than [`COARSENESS_LIMIT`] of the largest.
pub fn verify_weak_identity(mode: &SteklovMode, radial_order: usize, surface_order: usize) -> Result<f64> {
    let coarse = weak_terms(mode, radial_order, surface_order)?;
    let fine = weak_terms(mode, radial_order + REFINEMENT_STEP, surface_order + REFINEMENT_STEP)?;
    let scale = fine.terms.iter().map(|t| t.abs()).fold(0.0, f64::max);
    if scale > 0.0 {
        let change = coarse
            .terms
            .iter()
            .zip(&fine.terms)
            .map(|(a, b)| (a - b).abs() / scale)
            .fold(0.0, f64::max);
        if change > COARSENESS_LIMIT {
            return Err(Error::QuadratureTooCoarse { relative_change: change });
        }
    }
    Ok(coarse.relative_error())
}
