use super::scalar::scalar_y_full;
use super::{BallPoint, LocalVec, ModeIndex, SurfacePoint, Tau};
use crate::Result;

/// `A_1n, A_2n, A_3n` at one point, local-frame components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorHarmonics {
    pub a: [LocalVec; 3],
    /// `Y_n` at the same point.
    pub y: f64,
}

impl VectorHarmonics {
    pub fn get(&self, tau: Tau) -> LocalVec {
        self.a[tau.index()]
    }

    /// `c_1 A_1n + c_2 A_2n + c_3 A_3n`.
    pub fn combine(&self, c: [f64; 3]) -> LocalVec {
        self.a[0].scale(c[0]).add(&self.a[1].scale(c[1])).add(&self.a[2].scale(c[2]))
    }
}

/// All three vector harmonics at `p`. For `l = 0` the tangential ones are zero.
pub fn vector_a_all(n: &ModeIndex, p: &SurfacePoint) -> VectorHarmonics {
    let y = scalar_y_full(n, p);
    let a3 = LocalVec::new(y.value, 0.0, 0.0);
    if n.l() == 0 {
        return VectorHarmonics { a: [LocalVec::default(), LocalVec::default(), a3], y: y.value };
    }
    let inv = 1.0 / n.eigen_factor().sqrt();
    let (gt, gp) = (y.d_theta * inv, y.d_phi_over_sin * inv);
    // (grad Y × e_r): e_θ × e_r = -e_φ, e_φ × e_r = e_θ
    let a1 = LocalVec::new(0.0, gp, -gt);
    let a2 = LocalVec::new(0.0, gt, gp);
    VectorHarmonics { a: [a1, a2, a3], y: y.value }
}

/// `A_τn(ξ)` on the unit sphere.
pub fn vector_a(tau: Tau, n: &ModeIndex, p: &SurfacePoint) -> Result<LocalVec> {
    tau.check(n)?;
    Ok(vector_a_all(n, p).get(tau))
}

/// `A_τn(x)` for `x` in the punctured ball.
///
/// The factor `|x|` in front of `grad_x Y(x/|x|)` cancels the `1/|x|` that the
/// ambient gradient of a degree-zero homogeneous function carries, so the
/// extension is constant along rays.
pub fn vector_a_ball(tau: Tau, n: &ModeIndex, p: &BallPoint) -> Result<LocalVec> {
    vector_a(tau, n, &p.direction)
}
