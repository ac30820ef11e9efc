//! Boundary-value problem `ν × curl U = f` on the sphere, solved mode by mode,
//! and the test for `0` in the Steklov spectrum.

use serde::{Deserialize, Serialize};

use super::mode::{Family, SteklovMode};
use crate::dirichlet_exclusion::{roots_up_to, RootKind};
use crate::harmonics::{ModeIndex, Tau};
use crate::{Error, Result};

/// Eigenvalues below this size are treated as zero by [`solve_boundary_modal`].
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-12;

/// Finitely many coefficients of `f = Σ c_τn A_τn`, `τ ∈ {1, 2}`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModalBoundaryData {
    entries: Vec<(ModeIndex, Tau, f64)>,
}

impl ModalBoundaryData {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c A_τn`; `A_3n` is normal to the sphere and rejected.
    pub fn insert(&mut self, n: ModeIndex, tau: Tau, c: f64) -> Result<()> {
        if tau == Tau::Three {
            return Err(Error::InvalidMode("boundary data must be tangential (tau = 1 or 2)".into()));
        }
        tau.check(&n)?;
        if let Some(e) = self.entries.iter_mut().find(|(m, t, _)| *m == n && *t == tau) {
            e.2 += c;
        } else {
            self.entries.push((n, tau, c));
        }
        Ok(())
    }

    pub fn with(mut self, n: ModeIndex, tau: Tau, c: f64) -> Result<Self> {
        self.insert(n, tau, c)?;
        Ok(self)
    }

    pub fn entries(&self) -> &[(ModeIndex, Tau, f64)] {
        &self.entries
    }

    pub fn l_max(&self) -> usize {
        self.entries.iter().map(|(n, _, _)| n.l()).max().unwrap_or(0)
    }
}

/// One term `weight · E` of a modal solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedMode {
    pub mode: SteklovMode,
    pub weight: f64,
}

/// Solves `curl curl U - θ grad div U - k^2 U = 0`, `ν × curl U = f`.
///
/// `A_1n` data is carried by the family-2 eigenfield and `A_2n` data by the
/// family-1 eigenfield. Each eigenfield `E` with tangential trace `t A_τn` and
/// eigenvalue `λ` gets weight `c / (λ t)`, i.e. `c/λ` against the
/// trace-normalized field. Zero coefficients produce no term.
pub fn solve_boundary_modal(data: &ModalBoundaryData, k2: f64, theta: f64) -> Result<Vec<WeightedMode>> {
    let mut out = Vec::new();
    for &(n, tau, c) in data.entries() {
        if c == 0.0 {
            continue;
        }
        let family = if tau == Tau::One { Family::Two } else { Family::One };
        let mode = SteklovMode::new(family, n, k2, theta)?;
        if mode.lambda().abs() <= ZERO_EIGENVALUE_TOL {
            return Err(Error::ZeroEigenvalue { l: n.l() });
        }
        let t = mode.trace_coefficient()?;
        out.push(WeightedMode { mode, weight: c / (mode.lambda() * t) });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    /// `k^2 = θ z^2` with `j_l'(z) = 0`: a Neumann Laplacian eigenvalue.
    Neumann,
    /// `k^2 = x^2` with `j_l(x) + x j_l'(x) = 0`.
    Magnetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroWitness {
    pub kind: WitnessKind,
    pub l: usize,
    pub root: f64,
}

/// Whether `0` is a Steklov eigenvalue at `(k^2, θ)`, looking at `1 <= l <=
/// l_max`. Matches are within `1e-8 max(1, k^2)` in `k^2`.
pub fn zero_in_spectrum(k2: f64, theta: f64, l_max: usize) -> Result<(bool, Vec<ZeroWitness>)> {
    if !(k2 > 0.0 && k2.is_finite()) {
        return Err(Error::InvalidMode(format!("zero_in_spectrum needs k2 > 0, got {k2}")));
    }
    let tol = 1e-8 * k2.max(1.0);
    let mut witnesses = Vec::new();
    for l in 1..=l_max {
        let z_bound = (k2 / theta).sqrt() + 1.0;
        for z in roots_up_to(RootKind::Neumann, l, 1.0, z_bound)?.roots {
            if (theta * z * z - k2).abs() <= tol {
                witnesses.push(ZeroWitness { kind: WitnessKind::Neumann, l, root: z });
            }
        }
        for x in roots_up_to(RootKind::Magnetic, l, 1.0, k2.sqrt() + 1.0)?.roots {
            if (x * x - k2).abs() <= tol {
                witnesses.push(ZeroWitness { kind: WitnessKind::Magnetic, l, root: x });
            }
        }
    }
    Ok((!witnesses.is_empty(), witnesses))
}
