//! Spherical Bessel functions of the first kind, `j_l(z)` for complex `z`.
//!
//! Small arguments use the ascending power series. Everywhere else the whole
//! ladder `j_0 ..= j_lmax` comes from Miller's downward recurrence, normalized
//! against the closed forms of `j_0` or `j_1` (whichever is larger in
//! modulus). Downward recurrence is the stable direction for `l > |z|` and is
//! neutral in the oscillatory region, so one code path covers real, purely
//! imaginary and general complex arguments.

use num_complex::Complex64;

use crate::{Error, Result};

/// Below this modulus the ascending series is used.
const SERIES_RADIUS: f64 = 1e-2;
/// `sin z` overflows beyond this imaginary part.
const MAX_IMAG: f64 = 700.0;
const RESCALE_ABOVE: f64 = 1e200;
const RESCALE_BY: f64 = 1e-200;

/// Values `j_0(z), ..., j_lmax(z)`.
///
/// Orders whose value is below the smallest normal double come back as
/// (possibly) zero; the scalar entry points turn that into [`Error::Overflow`].
pub fn sph_bessel_j_array(lmax: usize, z: Complex64) -> Result<Vec<Complex64>> {
    if !z.re.is_finite() || !z.im.is_finite() || z.im.abs() > MAX_IMAG {
        return Err(Error::Overflow { l: lmax, modulus: z.norm() });
    }
    let modulus = z.norm();
    if modulus == 0.0 {
        let mut out = vec![Complex64::new(0.0, 0.0); lmax + 1];
        out[0] = Complex64::new(1.0, 0.0);
        return Ok(out);
    }
    if modulus < SERIES_RADIUS {
        return Ok((0..=lmax).map(|l| series(l, z)).collect());
    }
    miller(lmax, z)
}

/// Ascending series `z^l/(2l+1)!! * sum_k (-z^2/2)^k / (k! (2l+3)...(2l+2k+1))`.
fn series(l: usize, z: Complex64) -> Complex64 {
    let mut lead = Complex64::new(1.0, 0.0);
    for i in 1..=l {
        lead *= z / (2 * i + 1) as f64;
    }
    let half_z2 = -z * z * 0.5;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..40 {
        term *= half_z2 / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.norm() <= f64::EPSILON * 1e-3 * sum.norm() {
            break;
        }
    }
    lead * sum
}

fn start_order(lmax: usize, modulus: f64) -> usize {
    let base = (lmax as f64).max(modulus.ceil());
    (base + 30.0 + 15.0 * modulus.cbrt()).ceil() as usize
}

fn miller(lmax: usize, z: Complex64) -> Result<Vec<Complex64>> {
    let modulus = z.norm();
    let top = start_order(lmax, modulus);
    let zinv = z.inv();

    let mut out = vec![Complex64::new(0.0, 0.0); lmax + 1];
    // number of rescalings applied after each entry was stored
    let mut rescaled = vec![0u32; lmax + 1];
    let mut rescale_count = 0u32;
    // f_{k+1}, f_k
    let mut upper = Complex64::new(0.0, 0.0);
    let mut current = Complex64::new(1e-30, 0.0);
    for k in (1..=top).rev() {
        let lower = current * zinv * (2 * k + 1) as f64 - upper;
        upper = current;
        current = lower;
        if current.norm() > RESCALE_ABOVE {
            current *= RESCALE_BY;
            upper *= RESCALE_BY;
            rescale_count += 1;
        }
        if k - 1 <= lmax {
            out[k - 1] = current;
            rescaled[k - 1] = rescale_count;
        }
        if k <= lmax {
            out[k] = upper;
            rescaled[k] = rescale_count;
        }
    }
    // current = f_0, upper = f_1
    let (f0, f1) = (current, upper);
    let j0 = z.sin() * zinv;
    let j1 = (j0 - z.cos()) * zinv;
    // `fdiv` avoids forming |f|^2, which overflows near the rescale threshold
    let scale = if j0.norm() >= j1.norm() { j0.fdiv(f0) } else { j1.fdiv(f1) };
    if !scale.re.is_finite() || !scale.im.is_finite() {
        return Err(Error::Overflow { l: lmax, modulus });
    }
    for (v, &n) in out.iter_mut().zip(&rescaled) {
        *v *= scale;
        for _ in n..rescale_count {
            *v *= RESCALE_BY;
        }
    }
    Ok(out)
}

fn check_representable(l: usize, z: Complex64, value: Complex64) -> Result<Complex64> {
    let modulus = z.norm();
    let tiny = value.norm() < f64::MIN_POSITIVE;
    if tiny && modulus > 0.0 && (modulus < l as f64) {
        return Err(Error::Overflow { l, modulus });
    }
    Ok(value)
}

/// `j_l(z)`. Supported envelope: `l <= 200`, `|z| <= 100`.
pub fn sph_bessel_j(l: usize, z: Complex64) -> Result<Complex64> {
    let values = sph_bessel_j_array(l, z)?;
    check_representable(l, z, values[l])
}

/// `(j_l(z), j_l'(z))`.
///
/// The derivative uses `j_l' = (l j_{l-1} - (l+1) j_{l+1}) / (2l+1)`, which has
/// no `1/z` factor and therefore holds at `z = 0` as well.
pub fn sph_bessel_j_with_deriv(l: usize, z: Complex64) -> Result<(Complex64, Complex64)> {
    let values = sph_bessel_j_array(l + 1, z)?;
    let value = check_representable(l, z, values[l])?;
    let deriv = if l == 0 {
        -values[1]
    } else {
        (values[l - 1] * l as f64 - values[l + 1] * (l + 1) as f64) / (2 * l + 1) as f64
    };
    Ok((value, deriv))
}

/// `j_l'(z)`.
pub fn sph_bessel_j_deriv(l: usize, z: Complex64) -> Result<Complex64> {
    sph_bessel_j_with_deriv(l, z).map(|(_, d)| d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn j0_at_pi_vanishes() {
        assert!(sph_bessel_j(0, c(std::f64::consts::PI)).unwrap().norm() < 1e-14);
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(sph_bessel_j(0, c(0.0)).unwrap(), c(1.0));
        for l in 1..6 {
            assert_eq!(sph_bessel_j(l, c(0.0)).unwrap(), c(0.0));
        }
        assert!((sph_bessel_j_deriv(1, c(0.0)).unwrap() - c(1.0 / 3.0)).norm() < 1e-16);
        assert_eq!(sph_bessel_j_deriv(2, c(0.0)).unwrap(), c(0.0));
    }

    #[test]
    fn spot_values_at_one() {
        let j1 = sph_bessel_j(1, c(1.0)).unwrap();
        assert!((j1.re - 0.3011686789397568).abs() < 1e-15);
        let d0 = sph_bessel_j_deriv(0, c(1.0)).unwrap();
        assert!((d0.re + 0.3011686789397568).abs() < 1e-15);
        let d1 = sph_bessel_j_deriv(1, c(1.0)).unwrap();
        assert!((d1.re - 0.2391336269283829).abs() < 1e-15);
    }

    #[test]
    fn series_and_recurrence_agree_at_the_switch() {
        for l in 0..8 {
            let below = sph_bessel_j(l, c(0.999 * SERIES_RADIUS)).unwrap();
            let miller = miller(l, c(0.999 * SERIES_RADIUS)).unwrap()[l];
            assert!((below - miller).norm() <= 1e-13 * below.norm(), "l = {l}");
        }
    }

    #[test]
    fn tiny_values_report_overflow() {
        assert!(matches!(sph_bessel_j(200, c(1.0)), Err(Error::Overflow { .. })));
        assert!(matches!(sph_bessel_j(3, Complex64::new(0.0, 800.0)), Err(Error::Overflow { .. })));
    }
}
