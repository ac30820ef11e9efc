//! Closed-form radial profiles `E^1`, `(E^2, E^3)` of the ball eigenfields.

use num_complex::Complex64;

use super::eigenvalues::{check_params, check_theta, principal_k, BESSEL_RESONANCE_TOL};
use crate::harmonics::ModalRadial;
use crate::jet::Jet;
use crate::specfun::sph_bessel_j_with_deriv;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadialKind {
    /// `curl M_n`: `E^2 = sqrt(L)(k j'(kr) + j(kr)/r)`, `E^3 = L j(kr)/r`. Divergence-free.
    Monk,
    /// Gradient solution with `q = k/sqrt(θ)`: `E^2 = sqrt(L) j(qr)/r`, `E^3 = q j'(qr)`.
    CalE,
    /// `c Monk + CalE` with `c` chosen so that `E^3(1) = 0`.
    F,
    /// `E^1 = j(kr)`, the `A_1n` coefficient of family 2.
    E1,
}

/// Radial coefficients of one eigenfield, indexed by `τ`.
///
/// All internal evaluation is complex. For `k^2 < 0` every profile equals
/// `i^l` times a real function; [`RadialPair::phase`] removes that factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPair {
    l: usize,
    k2: f64,
    theta: f64,
    kind: RadialKind,
    k: Complex64,
    q: Complex64,
    /// Weight of the Monk solution inside `F` (zero for other kinds).
    monk_weight: Complex64,
    phase: Complex64,
}

/// `(E^1, E^2, E^3)` as complex jets in `r`.
pub type RadialJets = [Jet; 3];

pub fn radial_profiles(kind: RadialKind, l: usize, k2: f64, theta: f64) -> Result<RadialPair> {
    check_params(l, k2)?;
    check_theta(theta)?;
    let k = principal_k(k2);
    let q = k / theta.sqrt();
    let monk_weight = if kind == RadialKind::F {
        let (jk, djk) = sph_bessel_j_with_deriv(l, k)?;
        let djq = sph_bessel_j_with_deriv(l, q)?.1;
        let scale = (k * djk).norm();
        if jk.norm() < BESSEL_RESONANCE_TOL * scale {
            return Err(Error::DirichletResonance { l, k2, denominator: jk.norm(), scale });
        }
        (-djq * q).fdiv(jk * (l * (l + 1)) as f64)
    } else {
        Complex64::new(0.0, 0.0)
    };
    let phase = (Complex64::new(k.norm(), 0.0) / k).powu(l as u32);
    Ok(RadialPair { l, k2, theta, kind, k, q, monk_weight, phase })
}

impl RadialPair {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn kind(&self) -> RadialKind {
        self.kind
    }

    pub fn k(&self) -> Complex64 {
        self.k
    }

    /// `k / sqrt(θ)`.
    pub fn q(&self) -> Complex64 {
        self.q
    }

    /// Factor that makes every profile real.
    pub fn phase(&self) -> Complex64 {
        self.phase
    }

    /// Coefficient of the Monk pair in the `F` combination.
    pub fn monk_weight(&self) -> Complex64 {
        self.monk_weight
    }

    /// Weight of the gradient (`CalE`) pair, which alone carries divergence.
    pub fn divergence_weight(&self) -> f64 {
        match self.kind {
            RadialKind::CalE | RadialKind::F => 1.0,
            RadialKind::Monk | RadialKind::E1 => 0.0,
        }
    }

    /// Complex jets of `(E^1, E^2, E^3)` at `r > 0`, without the phase.
    pub fn jets(&self, r: f64) -> Result<RadialJets> {
        let big_l = (self.l * (self.l + 1)) as f64;
        let s = big_l.sqrt();
        let inv_r = Jet::recip(r);
        let zero = Jet::zero();
        let monk = |jk: &Jet| (((jk.derivative() + *jk * inv_r) * s), *jk * inv_r * big_l);
        let cal_e = |jq: &Jet| (*jq * inv_r * s, jq.derivative());
        Ok(match self.kind {
            RadialKind::E1 => [Jet::bessel(self.l, self.k, r)?, zero, zero],
            RadialKind::Monk => {
                let (e2, e3) = monk(&Jet::bessel(self.l, self.k, r)?);
                [zero, e2, e3]
            }
            RadialKind::CalE => {
                let (e2, e3) = cal_e(&Jet::bessel(self.l, self.q, r)?);
                [zero, e2, e3]
            }
            RadialKind::F => {
                let (m2, m3) = monk(&Jet::bessel(self.l, self.k, r)?);
                let (c2, c3) = cal_e(&Jet::bessel(self.l, self.q, r)?);
                let w = self.monk_weight;
                [zero, m2.scale(w) + c2, m3.scale(w) + c3]
            }
        })
    }

    /// Real profiles `[E^τ, E^τ', E^τ'']` at `r > 0`, phase removed.
    pub fn values(&self, r: f64) -> Result<ModalRadial> {
        let jets = self.jets(r)?;
        let mut out = ModalRadial::default();
        for (slot, jet) in out.e.iter_mut().zip(&jets) {
            for (n, v) in slot.iter_mut().enumerate() {
                *v = (jet.d(n) * self.phase).re;
            }
        }
        Ok(out)
    }
}
