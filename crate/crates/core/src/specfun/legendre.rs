//! Associated Legendre functions without the Condon-Shortley phase, so
//! `P_l^m(x) >= 0` for `x` near 1. The spherical-harmonic normalization is
//! applied by the callers in `harmonics`.

use crate::{Error, Result};

fn double_factorial_odd(m: usize) -> f64 {
    // (2m - 1)!!
    (1..=m).fold(1.0, |acc, i| acc * (2 * i - 1) as f64)
}

/// Ascending recurrence in `l` at fixed `m`, started from `seed = P_m^m`
/// (or any multiple of it).
fn ladder(l: usize, m: usize, x: f64, seed: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    let mut prev = seed;
    if l == m {
        return prev;
    }
    let mut curr = x * (2 * m + 1) as f64 * prev;
    for n in (m + 2)..=l {
        let next = ((2 * n - 1) as f64 * x * curr - (n + m - 1) as f64 * prev) / (n - m) as f64;
        prev = curr;
        curr = next;
    }
    curr
}

fn plain(l: usize, m: usize, x: f64) -> f64 {
    let s = (1.0 - x * x).max(0.0).sqrt();
    ladder(l, m, x, double_factorial_odd(m) * s.powi(m as i32))
}

/// `(P_l^m(x), d/dθ P_l^m(cos θ))` at `θ = arccos x`.
pub fn assoc_legendre(l: usize, m: usize, x: f64) -> Result<(f64, f64)> {
    if !(x.abs() <= 1.0) {
        return Err(Error::Domain(x));
    }
    if m > l {
        return Ok((0.0, 0.0));
    }
    let value = plain(l, m, x);
    let dtheta = if m == 0 {
        -plain(l, 1, x)
    } else {
        0.5 * ((l + m) as f64 * (l - m + 1) as f64 * plain(l, m - 1, x) - plain(l, m + 1, x))
    };
    Ok((value, dtheta))
}

/// `P_l^m(cos θ) / sin θ` for `m >= 1`, finite at the poles.
pub fn assoc_legendre_over_sin(l: usize, m: usize, x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::Domain(x));
    }
    if m == 0 {
        return Err(Error::InvalidMode("P_l^0 / sin θ is singular at the poles".into()));
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    Ok(ladder(l, m, x, double_factorial_odd(m) * s.powi(m as i32 - 1)))
}

/// Legendre polynomial `P_n(x)` and its derivative `P_n'(x)`.
pub fn legendre_p(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut prev, mut curr) = (1.0, x);
    for k in 1..n {
        let next = ((2 * k + 1) as f64 * x * curr - k as f64 * prev) / (k + 1) as f64;
        prev = curr;
        curr = next;
    }
    let deriv = if (1.0 - x * x).abs() < f64::EPSILON {
        let sign = if x > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 };
        sign * (n * (n + 1)) as f64 / 2.0
    } else {
        n as f64 * (prev - x * curr) / (1.0 - x * x)
    };
    (curr, deriv)
}
