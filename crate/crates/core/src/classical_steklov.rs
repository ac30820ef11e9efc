//! Scalar Steklov spectrum of the ball of radius `R` in `R^n`: eigenvalues
//! `j/R`, `j = 0, 1, ...`, each with the multiplicity of degree-`j` spherical
//! harmonics in `n` variables.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub j: u64,
    pub eigenvalue: f64,
    pub multiplicity: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalarSpectrum {
    pub dim: usize,
    pub radius: f64,
    pub entries: Vec<SpectrumEntry>,
}

impl ScalarSpectrum {
    /// Eigenvalues repeated according to multiplicity.
    pub fn flattened(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().flat_map(|e| std::iter::repeat_n(e.eigenvalue, e.multiplicity as usize))
    }

    pub fn flattened_len(&self) -> u128 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }
}

fn check_dim_radius(n: usize, radius: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidMode(format!("dimension must be at least 2, got {n}")));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::Domain(radius));
    }
    Ok(())
}

/// Multiplicity of the eigenvalue `j/R`:
/// `(2j+n-2) (j+n-3)! / (j! (n-2)!)` for `j >= 1`, and 1 for `j = 0`.
///
/// Evaluated as `(2j+n-2)/(j+n-2) · C(j+n-2, j)` with the binomial built up
/// one exact integer factor at a time.
pub fn multiplicity(n: usize, j: u64) -> u128 {
    if j == 0 {
        return 1;
    }
    let n = n as u128;
    let j = j as u128;
    // C(j+n-2, n-2) = Π_{i=1}^{n-2} (j+i)/i, exact at each step
    let mut binom: u128 = 1;
    for i in 1..=(n - 2) {
        binom = binom * (j + i) / i;
    }
    binom * (2 * j + n - 2) / (j + n - 2)
}

/// Eigenvalues with multiplicity, stopping once `count` flattened entries are
/// covered (the last entry may overshoot).
pub fn ball_steklov_spectrum(n: usize, radius: f64, count: usize) -> Result<ScalarSpectrum> {
    check_dim_radius(n, radius)?;
    let mut entries = Vec::new();
    let mut total: u128 = 0;
    let mut j = 0u64;
    while total < count as u128 {
        let multiplicity = multiplicity(n, j);
        entries.push(SpectrumEntry { j, eigenvalue: j as f64 / radius, multiplicity });
        total += multiplicity;
        j += 1;
    }
    Ok(ScalarSpectrum { dim: n, radius, entries })
}

/// `σ_l = l(l+n-2)/R^2`, the eigenvalues of the Laplace-Beltrami operator on
/// the sphere of radius `R`.
pub fn laplace_beltrami_eig(n: usize, radius: f64, l: u64) -> Result<f64> {
    check_dim_radius(n, radius)?;
    let l = l as f64;
    Ok(l * (l + n as f64 - 2.0) / (radius * radius))
}

/// Least-squares slope of `log λ_i` against `log i` over the upper half of
/// the first `count` flattened eigenvalues (`R = 1`, `i` from 1).
pub fn weyl_exponent_fit(n: usize, count: usize) -> Result<f64> {
    if count < 4 {
        return Err(Error::InvalidMode(format!("need at least 4 eigenvalues, got {count}")));
    }
    let spectrum = ball_steklov_spectrum(n, 1.0, count)?;
    let points: Vec<(f64, f64)> = spectrum
        .flattened()
        .take(count)
        .enumerate()
        .skip(count / 2)
        .map(|(i, lambda)| (((i + 1) as f64).ln(), lambda.ln()))
        .collect();
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// `(Σ (λ_j + 1) c_j^2)^(1/2)`.
pub fn h_half_norm(coefficients: &[f64], eigenvalues: &[f64]) -> Result<f64> {
    if coefficients.len() != eigenvalues.len() {
        return Err(Error::LengthMismatch(coefficients.len(), eigenvalues.len()));
    }
    Ok(coefficients.iter().zip(eigenvalues).map(|(c, l)| (l + 1.0) * c * c).sum::<f64>().sqrt())
}
