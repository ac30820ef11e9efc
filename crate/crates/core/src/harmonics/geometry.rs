use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Point on the unit sphere: colatitude `theta ∈ [0, π]`, longitude
/// `phi ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub theta: f64,
    pub phi: f64,
}

impl SurfacePoint {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::InvalidMode(format!("colatitude {theta} outside [0, π]")));
        }
        let phi = phi.rem_euclid(std::f64::consts::TAU);
        Ok(SurfacePoint { theta, phi })
    }

    /// Outward unit normal, which is also the position vector.
    pub fn normal(&self) -> Vec3 {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        Vec3::new(st * cp, st * sp, ct)
    }

    /// Antipodal point `-ξ`.
    pub fn antipode(&self) -> Self {
        SurfacePoint {
            theta: std::f64::consts::PI - self.theta,
            phi: (self.phi + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU),
        }
    }

    /// Orthonormal frame `(e_r, e_θ, e_φ)` in Cartesian components.
    pub fn frame(&self) -> [Vec3; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [
            Vec3::new(st * cp, st * sp, ct),
            Vec3::new(ct * cp, ct * sp, -st),
            Vec3::new(-sp, cp, 0.0),
        ]
    }
}

/// Point of the punctured ball: `r > 0` and a direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallPoint {
    pub r: f64,
    pub direction: SurfacePoint,
}

impl BallPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r > 0.0) {
            return Err(Error::InvalidMode(format!("radius {r} must be positive (origin excluded)")));
        }
        Ok(BallPoint { r, direction: SurfacePoint::new(theta, phi)? })
    }

    pub fn from_cartesian(x: Vec3) -> Result<Self> {
        let r = x.norm();
        if !(r > 0.0) {
            return Err(Error::InvalidMode("the origin has no direction".into()));
        }
        let theta = (x.z / r).clamp(-1.0, 1.0).acos();
        let phi = x.y.atan2(x.x);
        BallPoint::new(r, theta, phi)
    }

    pub fn to_cartesian(&self) -> Vec3 {
        self.direction.normal() * self.r
    }
}

/// Cartesian vector.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn unit(axis: usize) -> Self {
        let mut c = [0.0; 3];
        c[axis] = 1.0;
        Vec3::from(c)
    }

    pub fn dot(&self, o: &Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Components in the spherical frame at `p`.
    pub fn to_local(&self, p: &SurfacePoint) -> LocalVec {
        let [er, et, ep] = p.frame();
        LocalVec { r: self.dot(&er), theta: self.dot(&et), phi: self.dot(&ep) }
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(c: [f64; 3]) -> Self {
        Vec3::new(c[0], c[1], c[2])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl std::iter::Sum for Vec3 {
    fn sum<I: Iterator<Item = Vec3>>(iter: I) -> Vec3 {
        iter.fold(Vec3::default(), |a, b| a + b)
    }
}

/// Components `(v_r, v_θ, v_φ)` in the local spherical frame.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LocalVec {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl LocalVec {
    pub const fn new(r: f64, theta: f64, phi: f64) -> Self {
        LocalVec { r, theta, phi }
    }

    pub fn to_cartesian(&self, p: &SurfacePoint) -> Vec3 {
        let [er, et, ep] = p.frame();
        er * self.r + et * self.theta + ep * self.phi
    }

    pub fn scale(&self, s: f64) -> LocalVec {
        LocalVec::new(self.r * s, self.theta * s, self.phi * s)
    }

    pub fn add(&self, o: &LocalVec) -> LocalVec {
        LocalVec::new(self.r + o.r, self.theta + o.theta, self.phi + o.phi)
    }

    pub fn dot(&self, o: &LocalVec) -> f64 {
        self.r * o.r + self.theta * o.theta + self.phi * o.phi
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// `e_r × v`.
    pub fn normal_cross(&self) -> LocalVec {
        LocalVec::new(0.0, -self.phi, self.theta)
    }

    /// Tangential part `(ν × v) × ν`.
    pub fn tangential(&self) -> LocalVec {
        LocalVec::new(0.0, self.theta, self.phi)
    }
}
