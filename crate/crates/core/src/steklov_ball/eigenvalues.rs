//! Closed-form Steklov eigenvalues of the two families.

use num_complex::Complex64;

use crate::specfun::{sph_bessel_j_array, sph_bessel_j_with_deriv};
use crate::{Error, Result};

/// Relative size below which the family-1 denominator counts as zero.
pub const RESONANCE_TOL: f64 = 1e-10;
/// Size of `j_l(k)`, relative to `|k j_l'(k)|`, below which it counts as zero.
pub const BESSEL_RESONANCE_TOL: f64 = 1e-12;
/// Allowed imaginary part, relative to `1 + |Re|`.
pub const REALITY_TOL: f64 = 1e-10;

/// Principal square root of `k2`; purely imaginary when `k2 < 0`.
pub fn principal_k(k2: f64) -> Complex64 {
    Complex64::new(k2, 0.0).sqrt()
}

pub(crate) fn check_params(l: usize, k2: f64) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidMode("the vector families start at l = 1".into()));
    }
    if k2 == 0.0 || !k2.is_finite() {
        return Err(Error::InvalidMode(format!("k2 must be finite and non-zero, got {k2}")));
    }
    Ok(())
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(theta))
    }
}

pub(crate) fn real_part(z: Complex64) -> Result<f64> {
    if z.im.abs() > REALITY_TOL * (1.0 + z.re.abs()) {
        return Err(Error::NonRealEigenvalue { re: z.re, im: z.im });
    }
    Ok(z.re)
}

/// The three terms of the family-1 denominator
/// `j(q) j(k) l(l+1) - j'(q) j'(k) k^2/sqrt(θ) - j'(q) j(k) q`, `q = k/sqrt(θ)`,
/// together with the numerator `-j'(q) j(k) q k^2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Family1Parts {
    pub numerator: Complex64,
    pub terms: [Complex64; 3],
}

/// `(j_l(z), j_l'(z))` divided by the larger modulus of the two. Every
/// formula here is homogeneous in each such pair, and the products of raw
/// values underflow once `j_l` drops below about `1e-154`.
pub(crate) fn normalized_pair(l: usize, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (j, dj) = sph_bessel_j_with_deriv(l, z)?;
    let m = j.norm().max(dj.norm());
    if m == 0.0 || !m.is_finite() {
        return Err(Error::Overflow { l, modulus: z.norm() });
    }
    Ok((j / m, dj / m))
}

impl Family1Parts {
    pub fn new(l: usize, k: Complex64, theta: f64) -> Result<Self> {
        let sq = theta.sqrt();
        let q = k / sq;
        let (jk, djk) = normalized_pair(l, k)?;
        let (jq, djq) = normalized_pair(l, q)?;
        let big_l = (l * (l + 1)) as f64;
        Ok(Family1Parts {
            numerator: -djq * jk * q * k * k,
            terms: [jq * jk * big_l, -djq * djk * k * k / sq, -djq * jk * q],
        })
    }

    pub fn denominator(&self) -> Complex64 {
        self.terms.iter().sum()
    }

    pub fn scale(&self) -> f64 {
        self.terms.iter().map(|t| t.norm()).fold(0.0, f64::max)
    }
}

/// `λ_l^(1)(k^2, θ)`.
pub fn lambda1(l: usize, k2: f64, theta: f64) -> Result<f64> {
    check_params(l, k2)?;
    check_theta(theta)?;
    let parts = Family1Parts::new(l, principal_k(k2), theta)?;
    let denominator = parts.denominator();
    let scale = parts.scale();
    if denominator.norm() < RESONANCE_TOL * scale {
        return Err(Error::DirichletResonance { l, k2, denominator: denominator.norm(), scale });
    }
    real_part(parts.numerator.fdiv(denominator))
}

/// `λ_l^(2)(k^2) = -(j_l(k) + k j_l'(k)) / j_l(k)`.
pub fn lambda2(l: usize, k2: f64) -> Result<f64> {
    check_params(l, k2)?;
    let k = principal_k(k2);
    let (j, dj) = normalized_pair(l, k)?;
    let scale = (k * dj).norm();
    if j.norm() < BESSEL_RESONANCE_TOL * scale {
        return Err(Error::DirichletResonance { l, k2, denominator: j.norm(), scale });
    }
    real_part((-(j + k * dj)).fdiv(j))
}

/// The `θ = 1` form `-k j_l(k) j_l'(k) / (j_{l+1}(k) j_{l-1}(k))`.
pub fn lambda1_theta1_alt(l: usize, k2: f64) -> Result<f64> {
    check_params(l, k2)?;
    let k = principal_k(k2);
    let v = sph_bessel_j_array(l + 1, k)?;
    let m = v[l - 1].norm().max(v[l].norm()).max(v[l + 1].norm());
    if m == 0.0 || !m.is_finite() {
        return Err(Error::Overflow { l, modulus: k.norm() });
    }
    let (below, at, above) = (v[l - 1] / m, v[l] / m, v[l + 1] / m);
    let dj = (below * l as f64 - above * (l + 1) as f64) / (2 * l + 1) as f64;
    let denominator = below * above;
    // the normalized triple has largest modulus one
    let scale = 1.0;
    if denominator.norm() < RESONANCE_TOL * scale {
        return Err(Error::DirichletResonance { l, k2, denominator: denominator.norm(), scale });
    }
    real_part((-k * at * dj).fdiv(denominator))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family2_closed_form_at_one() {
        // j_1(1) + j_1'(1) = cos 1
        let j1 = 1f64.sin() - 1f64.cos();
        assert!((lambda2(1, 1.0).unwrap() + 1f64.cos() / j1).abs() < 1e-14);
    }

    #[test]
    fn rejects_l_zero_and_k_zero() {
        assert!(matches!(lambda1(0, 1.0, 1.0), Err(Error::InvalidMode(_))));
        assert!(matches!(lambda2(1, 0.0), Err(Error::InvalidMode(_))));
        assert!(matches!(lambda1(1, 1.0, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn forms_agree_at_one() {
        let a = lambda1(1, 1.0, 1.0).unwrap();
        let b = lambda1_theta1_alt(1, 1.0).unwrap();
        assert!((a - b).abs() <= 1e-12 * a.abs());
    }
}
