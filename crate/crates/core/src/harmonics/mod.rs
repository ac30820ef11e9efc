//! Real scalar spherical harmonics `Y_n`, the vector harmonics
//! `A_1n, A_2n, A_3n` on the unit sphere and in the punctured ball, and the
//! modal calculus (Laplacian, divergence, curl) acting on `f(r) A_τn`.
//!
//! Conventions: `Y_{σml} = C_lm P_l^m(cos θ) F_σ(mφ)` with `F_e = cos`,
//! `F_o = sin`, `C_lm = sqrt(ε_m / 2π) sqrt((2l+1)(l-m)! / (2(l+m)!))` and
//! `P_l^m` without the Condon-Shortley phase. The harmonics are orthonormal on
//! the unit sphere. Gradients on the sphere are surface gradients.

mod calculus;
mod expansion;
mod geometry;
mod scalar;
mod surface;
mod vector;

pub use calculus::{
    check_curl, check_divergence, check_grad_div, check_vector_laplacian, curl_radial,
    divergence_coeffs, fd_curl, fd_divergence, fd_grad_div, fd_vector_laplacian, modal_field,
    richardson, ModalRadial, RadialFn, DEFAULT_MIN_RADIUS,
};
pub use expansion::{expand_field, ModalExpansion};
pub use geometry::{BallPoint, LocalVec, SurfacePoint, Vec3};
pub use scalar::{scalar_y, scalar_y_full, ScalarHarmonic};
pub use surface::SurfaceRule;
pub use vector::{vector_a, vector_a_ball, vector_a_all, VectorHarmonics};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn tag(self) -> char {
        match self {
            Parity::Even => 'e',
            Parity::Odd => 'o',
        }
    }
}

/// The triple `(σ, m, l)` labelling a real spherical harmonic.
///
/// `m <= l`, and odd modes need `m >= 1` since `Y_{o0l}` vanishes identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModeIndex {
    parity: Parity,
    m: usize,
    l: usize,
}

impl ModeIndex {
    pub fn new(parity: Parity, m: usize, l: usize) -> Result<Self> {
        if m > l {
            return Err(Error::InvalidMode(format!("order m = {m} exceeds degree l = {l}")));
        }
        if parity == Parity::Odd && m == 0 {
            return Err(Error::InvalidMode(format!("odd mode with m = 0 vanishes (l = {l})")));
        }
        Ok(ModeIndex { parity, m, l })
    }

    pub fn even(m: usize, l: usize) -> Result<Self> {
        Self::new(Parity::Even, m, l)
    }

    pub fn odd(m: usize, l: usize) -> Result<Self> {
        Self::new(Parity::Odd, m, l)
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `l (l+1)`.
    pub fn eigen_factor(&self) -> f64 {
        (self.l * (self.l + 1)) as f64
    }

    /// All modes with `l_min <= l <= l_max`, ordered by `l`, then `m`, even
    /// before odd. The `2l+1` modes of each degree are all present.
    pub fn enumerate(l_min: usize, l_max: usize) -> Vec<ModeIndex> {
        let mut out = Vec::new();
        for l in l_min..=l_max {
            for m in 0..=l {
                out.push(ModeIndex { parity: Parity::Even, m, l });
                if m > 0 {
                    out.push(ModeIndex { parity: Parity::Odd, m, l });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.parity.tag(), self.m, self.l)
    }
}

/// Which vector harmonic: `A_1n` (tangential, curl-type), `A_2n` (tangential,
/// gradient-type) or `A_3n` (radial).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tau {
    One,
    Two,
    Three,
}

impl Tau {
    pub const ALL: [Tau; 3] = [Tau::One, Tau::Two, Tau::Three];

    pub fn index(self) -> usize {
        match self {
            Tau::One => 0,
            Tau::Two => 1,
            Tau::Three => 2,
        }
    }

    pub fn from_number(tau: u8) -> Result<Self> {
        match tau {
            1 => Ok(Tau::One),
            2 => Ok(Tau::Two),
            3 => Ok(Tau::Three),
            other => Err(Error::InvalidMode(format!("vector harmonic type {other} is not 1, 2 or 3"))),
        }
    }

    pub(crate) fn check(self, n: &ModeIndex) -> Result<()> {
        if self != Tau::Three && n.l() == 0 {
            return Err(Error::InvalidMode(format!("A_{}n vanishes for l = 0", self.index() + 1)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let modes = ModeIndex::enumerate(0, 4);
        assert_eq!(modes.len(), 25);
        assert!(modes.iter().all(|n| !(n.parity() == Parity::Odd && n.m() == 0)));
        assert_eq!(ModeIndex::enumerate(3, 3).len(), 7);
    }

    #[test]
    fn invalid_modes_are_rejected() {
        assert!(ModeIndex::odd(0, 3).is_err());
        assert!(ModeIndex::even(4, 3).is_err());
        assert!(Tau::One.check(&ModeIndex::even(0, 0).unwrap()).is_err());
        assert!(Tau::Three.check(&ModeIndex::even(0, 0).unwrap()).is_ok());
    }
}
