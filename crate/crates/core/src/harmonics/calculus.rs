//! Modal calculus on fields `f(r) A_τn(ξ)` and the Cartesian
//! finite-difference verifiers that check it.
//!
//! Every `check_*` function returns the max-norm difference between a
//! central-difference evaluation (second order in `h`) and the modal formula.

use super::vector::vector_a_all;
use super::{BallPoint, ModeIndex, Tau, Vec3};
use crate::{Error, Result};

/// Verifiers keep sample points at least this far from the origin.
pub const DEFAULT_MIN_RADIUS: f64 = 0.05;

/// Radial function returning `[f(r), f'(r), f''(r)]`.
pub type RadialFn<'a> = &'a dyn Fn(f64) -> [f64; 3];

/// Radial coefficients of a single-mode field and their first two
/// derivatives: `e[τ] = [E^τ, E^τ', E^τ'']`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ModalRadial {
    pub e: [[f64; 3]; 3],
}

/// Modal divergence coefficient `Φ(r) = E3' + 2 E3 / r - sqrt(l(l+1)) E2 / r`.
pub fn divergence_coeffs(e2: f64, e3: f64, de3_dr: f64, l: usize, r: f64) -> f64 {
    let s = ((l * (l + 1)) as f64).sqrt();
    de3_dr + 2.0 * e3 / r - s * e2 / r
}

/// Coefficients on `(A_1n, A_2n, A_3n)` of `curl(f(r) A_τn)`, given `f(r)` and
/// `(1/r) d(r f)/dr`.
pub fn curl_radial(tau: Tau, n: &ModeIndex, f: f64, rf_prime_over_r: f64, r: f64) -> Result<[f64; 3]> {
    tau.check(n)?;
    let s = n.eigen_factor().sqrt();
    Ok(match tau {
        Tau::One => [0.0, rf_prime_over_r, s * f / r],
        Tau::Two => [-rf_prime_over_r, 0.0, 0.0],
        Tau::Three => [s * f / r, 0.0, 0.0],
    })
}

/// `Σ_τ c_τ(|x|) A_τn(x/|x|)` in Cartesian components.
pub fn modal_field(n: &ModeIndex, radial: &dyn Fn(f64) -> [f64; 3], x: Vec3) -> Vec3 {
    let Ok(p) = BallPoint::from_cartesian(x) else {
        return Vec3::default();
    };
    let c = radial(p.r);
    vector_a_all(n, &p.direction).combine(c).to_cartesian(&p.direction)
}

fn partial(field: &dyn Fn(Vec3) -> Vec3, x: Vec3, h: f64, axis: usize) -> Vec3 {
    let e = Vec3::unit(axis) * h;
    (field(x + e) - field(x - e)) * (0.5 / h)
}

pub fn fd_divergence(field: &dyn Fn(Vec3) -> Vec3, x: Vec3, h: f64) -> f64 {
    (0..3).map(|axis| partial(field, x, h, axis).to_array()[axis]).sum()
}

pub fn fd_curl(field: &dyn Fn(Vec3) -> Vec3, x: Vec3, h: f64) -> Vec3 {
    let dx = partial(field, x, h, 0);
    let dy = partial(field, x, h, 1);
    let dz = partial(field, x, h, 2);
    Vec3::new(dy.z - dz.y, dz.x - dx.z, dx.y - dy.x)
}

pub fn fd_vector_laplacian(field: &dyn Fn(Vec3) -> Vec3, x: Vec3, h: f64) -> Vec3 {
    let centre = field(x);
    (0..3)
        .map(|axis| {
            let e = Vec3::unit(axis) * h;
            (field(x + e) + field(x - e) - centre * 2.0) * (1.0 / (h * h))
        })
        .sum()
}

/// Nested central differences: gradient of the difference-quotient divergence.
pub fn fd_grad_div(field: &dyn Fn(Vec3) -> Vec3, x: Vec3, h: f64) -> Vec3 {
    let div = |y: Vec3| fd_divergence(field, y, h);
    let g: Vec<f64> = (0..3)
        .map(|axis| {
            let e = Vec3::unit(axis) * h;
            (div(x + e) - div(x - e)) / (2.0 * h)
        })
        .collect();
    Vec3::new(g[0], g[1], g[2])
}

/// One level of Richardson extrapolation for a second-order scheme.
pub fn richardson(scheme: impl Fn(f64) -> Vec3, h: f64) -> Vec3 {
    (scheme(0.5 * h) * 4.0 - scheme(h)) * (1.0 / 3.0)
}

fn check_step(p: &BallPoint, h: f64) -> Result<()> {
    if !(h > 0.0) || h > p.r / 4.0 {
        return Err(Error::StepTooLarge { h, r: p.r });
    }
    Ok(())
}

/// Residual of the vector-Laplacian identities for `f(r) A_τn`:
/// `Δ(f V) = r^-2 (r^2 f')' V + f ΔV` with the modal `ΔA_τn`.
pub fn check_vector_laplacian(tau: Tau, n: &ModeIndex, p: &BallPoint, h: f64, f: RadialFn) -> Result<f64> {
    tau.check(n)?;
    check_step(p, h)?;
    let field = |x: Vec3| {
        let mut c = [0.0; 3];
        let Ok(bp) = BallPoint::from_cartesian(x) else {
            return Vec3::default();
        };
        c[tau.index()] = f(bp.r)[0];
        modal_field(n, &|_| c, x)
    };
    let x = p.to_cartesian();
    let fd = fd_vector_laplacian(&field, x, h);

    let r = p.r;
    let [fv, f1, f2] = f(r);
    let big_l = n.eigen_factor();
    let s = big_l.sqrt();
    let radial_part = f2 + 2.0 * f1 / r;
    let mut coeffs = [0.0; 3];
    coeffs[tau.index()] += radial_part;
    let inv_r2 = 1.0 / (r * r);
    match tau {
        Tau::One => coeffs[0] -= fv * big_l * inv_r2,
        Tau::Two => {
            coeffs[1] -= fv * big_l * inv_r2;
            coeffs[2] += fv * 2.0 * s * inv_r2;
        }
        Tau::Three => {
            coeffs[2] -= fv * (2.0 + big_l) * inv_r2;
            coeffs[1] += fv * 2.0 * s * inv_r2;
        }
    }
    let exact = vector_a_all(n, &p.direction).combine(coeffs).to_cartesian(&p.direction);
    Ok((fd - exact).max_abs())
}

/// Residual of `curl(f A_τn)` against [`curl_radial`].
pub fn check_curl(tau: Tau, n: &ModeIndex, p: &BallPoint, h: f64, f: RadialFn) -> Result<f64> {
    tau.check(n)?;
    check_step(p, h)?;
    let field = |x: Vec3| {
        let mut c = [0.0; 3];
        let Ok(bp) = BallPoint::from_cartesian(x) else {
            return Vec3::default();
        };
        c[tau.index()] = f(bp.r)[0];
        modal_field(n, &|_| c, x)
    };
    let fd = fd_curl(&field, p.to_cartesian(), h);
    let [fv, f1, _] = f(p.r);
    let coeffs = curl_radial(tau, n, fv, fv / p.r + f1, p.r)?;
    let exact = vector_a_all(n, &p.direction).combine(coeffs).to_cartesian(&p.direction);
    Ok((fd - exact).max_abs())
}

fn radial_values(radial: &dyn Fn(f64) -> ModalRadial, r: f64) -> [f64; 3] {
    let m = radial(r);
    [m.e[0][0], m.e[1][0], m.e[2][0]]
}

/// Residual of the modal divergence `div E = Φ(r) Y_n`.
pub fn check_divergence(n: &ModeIndex, p: &BallPoint, h: f64, radial: &dyn Fn(f64) -> ModalRadial) -> Result<f64> {
    check_step(p, h)?;
    let field = |x: Vec3| modal_field(n, &|r| radial_values(radial, r), x);
    let fd = fd_divergence(&field, p.to_cartesian(), h);
    let m = radial(p.r);
    let phi = divergence_coeffs(m.e[1][0], m.e[2][0], m.e[2][1], n.l(), p.r);
    let y = vector_a_all(n, &p.direction).y;
    Ok((fd - phi * y).abs())
}

/// Residual of `grad div E = Φ' A_3n + sqrt(l(l+1)) Φ / r A_2n`.
pub fn check_grad_div(n: &ModeIndex, p: &BallPoint, h: f64, radial: &dyn Fn(f64) -> ModalRadial) -> Result<f64> {
    check_step(p, h)?;
    let field = |x: Vec3| modal_field(n, &|r| radial_values(radial, r), x);
    let fd = fd_grad_div(&field, p.to_cartesian(), h);
    let r = p.r;
    let m = radial(r);
    let s = n.eigen_factor().sqrt();
    let [e2, de2, _] = m.e[1];
    let [e3, de3, d2e3] = m.e[2];
    let phi = de3 + 2.0 * e3 / r - s * e2 / r;
    let dphi = d2e3 + 2.0 * de3 / r - 2.0 * e3 / (r * r) - s * de2 / r + s * e2 / (r * r);
    let exact = vector_a_all(n, &p.direction)
        .combine([0.0, s * phi / r, dphi])
        .to_cartesian(&p.direction);
    Ok((fd - exact).max_abs())
}
