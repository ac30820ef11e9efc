//! Eigenpairs of the ball and pointwise evaluation of their fields.

use serde::{Deserialize, Serialize};

use super::eigenvalues::{lambda1, lambda2};
use super::radial::{radial_profiles, RadialKind, RadialPair};
use crate::harmonics::{vector_a_all, BallPoint, LocalVec, ModeIndex, SurfacePoint, Vec3, VectorHarmonics};
use crate::specfun::sph_bessel_j;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `F^2 A_2n + F^3 A_3n`, eigenvalue `λ^(1)`, non-zero divergence.
    One,
    /// `j_l(kr) A_1n`, eigenvalue `λ^(2)`, divergence-free.
    Two,
}

impl Family {
    pub fn number(self) -> u8 {
        match self {
            Family::One => 1,
            Family::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            _ => Err(Error::InvalidMode(format!("family must be 1 or 2, got {n}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteklovMode {
    family: Family,
    n: ModeIndex,
    lambda: f64,
    radial: RadialPair,
}

/// Real modal coefficients at one radius: the field, its curl and `Φ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModalFields {
    /// `[E^1, E^2, E^3]`.
    pub field: [f64; 3],
    /// Coefficients of `curl E` on `(A_1n, A_2n, A_3n)`.
    pub curl: [f64; 3],
    /// `div E = Φ(r) Y_n`.
    pub phi: f64,
}

impl SteklovMode {
    pub fn new(family: Family, n: ModeIndex, k2: f64, theta: f64) -> Result<Self> {
        let l = n.l();
        let (lambda, kind) = match family {
            Family::One => (lambda1(l, k2, theta)?, RadialKind::F),
            Family::Two => (lambda2(l, k2)?, RadialKind::E1),
        };
        let radial = radial_profiles(kind, l, k2, theta)?;
        Ok(SteklovMode { family, n, lambda, radial })
    }

    /// Same field paired with a different eigenvalue; used to check that the
    /// verifiers notice a wrong `λ`.
    pub fn with_lambda(self, lambda: f64) -> Self {
        SteklovMode { lambda, ..self }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mode(&self) -> ModeIndex {
        self.n
    }

    pub fn l(&self) -> usize {
        self.n.l()
    }

    pub fn k2(&self) -> f64 {
        self.radial.k2()
    }

    pub fn theta(&self) -> f64 {
        self.radial.theta()
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn radial(&self) -> &RadialPair {
        &self.radial
    }

    /// Field, curl and divergence coefficients at radius `r > 0`.
    pub fn modal_fields(&self, r: f64) -> Result<ModalFields> {
        let v = self.radial.values(r)?;
        let s = self.n.eigen_factor().sqrt();
        let [e1, de1, _] = v.e[0];
        let [e2, de2, _] = v.e[1];
        let [e3, de3, _] = v.e[2];
        let curl = [-(de2 + e2 / r) + s * e3 / r, de1 + e1 / r, s * e1 / r];
        let phi = de3 + 2.0 * e3 / r - s * e2 / r;
        Ok(ModalFields { field: [e1, e2, e3], curl, phi })
    }

    /// Value of `j_l(q r)` with the real phase applied, `q = k/sqrt(θ)`.
    pub(crate) fn scaled_bessel(&self, r: f64) -> Result<f64> {
        let v = sph_bessel_j(self.l(), self.radial.q() * r)?;
        Ok((v * self.radial.phase()).re)
    }

    /// Tangential trace coefficient on `A_1n` (family 2) or `A_2n` (family 1).
    pub fn trace_coefficient(&self) -> Result<f64> {
        let f = self.modal_fields(1.0)?;
        Ok(match self.family {
            Family::One => f.field[1],
            Family::Two => f.field[0],
        })
    }
}

fn local_field(mode: &SteklovMode, p: &BallPoint) -> Result<(VectorHarmonics, ModalFields)> {
    Ok((vector_a_all(&mode.n, &p.direction), mode.modal_fields(p.r)?))
}

/// `E(p)` in Cartesian components.
pub fn eigenfield(mode: &SteklovMode, p: &BallPoint) -> Result<Vec3> {
    let (h, f) = local_field(mode, p)?;
    Ok(h.combine(f.field).to_cartesian(&p.direction))
}

/// `curl E(p)` in Cartesian components.
pub fn eigenfield_curl(mode: &SteklovMode, p: &BallPoint) -> Result<Vec3> {
    let (h, f) = local_field(mode, p)?;
    Ok(h.combine(f.curl).to_cartesian(&p.direction))
}

/// `E` and `curl E` at a point of the unit sphere, local frame.
pub(crate) fn boundary_fields(mode: &SteklovMode, p: &SurfacePoint) -> Result<(LocalVec, LocalVec)> {
    let h = vector_a_all(&mode.n, p);
    let f = mode.modal_fields(1.0)?;
    Ok((h.combine(f.field), h.combine(f.curl)))
}

/// `div E(p)` from the modal formula `Φ(r) Y_n`.
pub fn divergence_field(mode: &SteklovMode, p: &BallPoint) -> Result<f64> {
    let (h, f) = local_field(mode, p)?;
    Ok(f.phi * h.y)
}

/// `b (-k^2/θ) j_l(k r/sqrt(θ)) Y_n`, with `b` the weight of the gradient pair.
pub fn divergence_closed_form(mode: &SteklovMode, p: &BallPoint) -> Result<f64> {
    let b = mode.radial.divergence_weight();
    if b == 0.0 {
        return Ok(0.0);
    }
    let y = vector_a_all(&mode.n, &p.direction).y;
    Ok(b * (-mode.k2() / mode.theta()) * mode.scaled_bessel(p.r)? * y)
}
