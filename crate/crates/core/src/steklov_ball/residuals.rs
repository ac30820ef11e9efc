//! Pointwise residuals of the radial ODE systems, the divergence equation and
//! the Steklov boundary condition.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::mode::{boundary_fields, Family, SteklovMode};
use super::radial::{RadialKind, RadialPair};
use crate::harmonics::{vector_a_all, BallPoint, SurfacePoint};
use crate::jet::Jet;
use crate::Result;

/// A residual together with the size of the terms that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Residual {
    pub value: f64,
    pub scale: f64,
}

impl Residual {
    /// `|Σ terms|` against `max |term|`.
    pub fn from_terms(terms: &[Complex64]) -> Self {
        let sum: Complex64 = terms.iter().sum();
        let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        Residual { value: sum.norm(), scale }
    }

    /// `value / scale`; a vanishing scale means every term was zero.
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.value
        } else {
            self.value / self.scale
        }
    }

    pub fn within(&self, tol: f64) -> bool {
        self.value <= tol * self.scale
    }
}

/// Residuals of the coupled system for `(E^2, E^3)` at `r`, including the
/// `(1-θ)` penalty terms. For a pair of kind `E1` the first slot holds the
/// residual of the decoupled `E^1` equation and the second is zero.
pub fn residual_system(pair: &RadialPair, r: f64) -> Result<[Residual; 2]> {
    let [e1, a, b] = pair.jets(r)?;
    let l = pair.l();
    let big_l = (l * (l + 1)) as f64;
    let s = big_l.sqrt();
    let k2 = pair.k() * pair.k();
    let r2 = r * r;
    if pair.kind() == RadialKind::E1 {
        let terms = [-e1.d(2), -2.0 * e1.d(1) / r, e1.d(0) * big_l / r2, -k2 * e1.d(0)];
        return Ok([Residual::from_terms(&terms), Residual::default()]);
    }
    let p = 1.0 - pair.theta();
    let first = [
        -a.d(2),
        -2.0 * a.d(1) / r,
        a.d(0) * big_l / r2,
        -2.0 * s * b.d(0) / r2,
        -k2 * a.d(0),
        // (1-θ) sqrt(L) Φ / r
        p * s * b.d(1) / r,
        p * 2.0 * s * b.d(0) / r2,
        -p * big_l * a.d(0) / r2,
    ];
    let second = [
        -b.d(2),
        -2.0 * b.d(1) / r,
        (2.0 + big_l) * b.d(0) / r2,
        -2.0 * s * a.d(0) / r2,
        -k2 * b.d(0),
        // (1-θ) Φ'
        p * b.d(2),
        p * 2.0 * b.d(1) / r,
        -p * 2.0 * b.d(0) / r2,
        -p * s * a.d(1) / r,
        p * s * a.d(0) / r2,
    ];
    Ok([Residual::from_terms(&first), Residual::from_terms(&second)])
}

/// `L_{k,l} g = (r^2 g')' + (k^2 r^2 - l(l+1)) g`, returned with the pieces
/// it is built from.
fn bessel_operator(g: &Jet, k2: Complex64, big_l: f64, r: f64) -> (Jet, [Jet; 3]) {
    let rr = Jet::identity(r);
    let dg = g.derivative();
    let pieces = [rr * rr * dg.derivative(), rr * dg * 2.0, (rr * rr).scale(k2) * *g - *g * big_l];
    (pieces[0] + pieces[1] + pieces[2], pieces)
}

/// `(L_{k,l})^2 E^3 - 2 L_{k,l} E^3 - 4 l(l+1) E^3` at `r`, for a jet of `E^3`
/// carrying at least four derivatives.
pub fn residual_fourth_order(l: usize, k2: f64, r: f64, e3: &dyn Fn(f64) -> Result<Jet>) -> Result<Residual> {
    let g = e3(r)?;
    let big_l = (l * (l + 1)) as f64;
    let k2 = Complex64::new(k2, 0.0);
    let (lg, inner) = bessel_operator(&g, k2, big_l, r);
    let (llg, outer) = bessel_operator(&lg, k2, big_l, r);
    let value = (llg.value() - 2.0 * lg.value() - 4.0 * big_l * g.value()).norm();
    let scale = outer
        .iter()
        .chain(inner.iter())
        .map(|j| j.value().norm())
        .chain([2.0 * lg.value().norm(), 4.0 * big_l * g.value().norm()])
        .fold(0.0, f64::max);
    Ok(Residual { value, scale })
}

/// [`residual_fourth_order`] for the `E^3` profile of `pair` (`θ = 1`).
pub fn residual_fourth_order_pair(pair: &RadialPair, r: f64) -> Result<Residual> {
    residual_fourth_order(pair.l(), pair.k2(), r, &|r| Ok(pair.jets(r)?[2]))
}

/// Jet of `Φ = E^3' + 2 E^3/r - sqrt(l(l+1)) E^2/r` in `r`.
fn phi_jet(mode: &SteklovMode, r: f64) -> Result<Jet> {
    let [_, a, b] = mode.radial().jets(r)?;
    let inv_r = Jet::recip(r);
    let s = mode.mode().eigen_factor().sqrt();
    Ok((b.derivative() + b * inv_r * 2.0 - a * inv_r * s).scale(mode.radial().phase()))
}

/// `-Δ(div E) - (k^2/θ) div E` at `p`, with the scalar Laplacian of
/// `Φ(r) Y_n` taken in modal form.
pub fn residual_div_helmholtz(mode: &SteklovMode, p: &BallPoint) -> Result<Residual> {
    if mode.family() == Family::Two {
        return Ok(Residual::default());
    }
    let r = p.r;
    let phi = phi_jet(mode, r)?;
    let y = vector_a_all(&mode.mode(), &p.direction).y;
    let big_l = mode.mode().eigen_factor();
    let a = mode.k2() / mode.theta();
    let terms = [-phi.d(2), -2.0 * phi.d(1) / r, phi.d(0) * big_l / (r * r), -a * phi.d(0)];
    let mut res = Residual::from_terms(&terms);
    res.value *= y.abs();
    res.scale *= y.abs();
    Ok(res)
}

/// Boundary condition of the divergence problem on the sphere,
/// `∂_ν div E = -(λ/θ) div_Γ E`, in modal form
/// `Φ'(1) = (λ/θ) sqrt(l(l+1)) E^2(1)`.
pub fn residual_div_boundary(mode: &SteklovMode) -> Result<Residual> {
    if mode.family() == Family::Two {
        return Ok(Residual::default());
    }
    let phi = phi_jet(mode, 1.0)?;
    let e2 = mode.modal_fields(1.0)?.field[1];
    let s = mode.mode().eigen_factor().sqrt();
    let rhs = mode.lambda() / mode.theta() * s * e2;
    Ok(Residual::from_terms(&[phi.d(1), Complex64::new(-rhs, 0.0)]))
}

/// `|ν × curl E - λ E_T|` at a point of the unit sphere; the scale is the
/// larger of `|ν × curl E|` and `|λ E_T|`.
pub fn verify_steklov_bc(mode: &SteklovMode, p: &SurfacePoint) -> Result<Residual> {
    let (e, curl) = boundary_fields(mode, p)?;
    let lhs = curl.normal_cross();
    let rhs = e.tangential().scale(mode.lambda());
    Ok(Residual { value: lhs.add(&rhs.scale(-1.0)).norm(), scale: lhs.norm().max(rhs.norm()) })
}
