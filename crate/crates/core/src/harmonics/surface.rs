use super::SurfacePoint;
use crate::specfun::gauss_legendre;

/// Product rule on the unit sphere: Gauss-Legendre in `cos θ` times the
/// uniform trapezoid rule in `φ`. No node sits on a pole.
#[derive(Debug, Clone)]
pub struct SurfaceRule {
    points: Vec<(SurfacePoint, f64)>,
    degree: usize,
}

impl SurfaceRule {
    /// Rule integrating every spherical polynomial of degree `<= degree`
    /// exactly: `⌈(degree+1)/2⌉` nodes in `cos θ`, `degree + 1` in `φ`.
    pub fn for_degree(degree: usize) -> Self {
        let n_theta = (degree + 2) / 2;
        let n_phi = degree + 1;
        let gl = gauss_legendre(n_theta.max(1));
        let dphi = std::f64::consts::TAU / n_phi as f64;
        let mut points = Vec::with_capacity(gl.len() * n_phi);
        for (&x, &w) in gl.nodes.iter().zip(&gl.weights) {
            let theta = x.acos();
            for j in 0..n_phi {
                points.push((SurfacePoint { theta, phi: j as f64 * dphi }, w * dphi));
            }
        }
        SurfaceRule { points, degree }
    }

    /// Rule exact for products of two harmonics of degree `<= l_max`.
    pub fn for_products(l_max: usize) -> Self {
        Self::for_degree(2 * l_max + 1)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &[(SurfacePoint, f64)] {
        &self.points
    }

    pub fn integrate(&self, f: impl Fn(&SurfacePoint) -> f64) -> f64 {
        self.points.iter().map(|(p, w)| w * f(p)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn area_of_sphere() {
        let rule = SurfaceRule::for_degree(0);
        assert!((rule.integrate(|_| 1.0) - 4.0 * std::f64::consts::PI).abs() < 1e-13);
    }

    #[test]
    fn avoids_poles() {
        let rule = SurfaceRule::for_degree(9);
        assert!(rule.points().iter().all(|(p, _)| p.theta.sin() > 1e-3));
    }

    #[test]
    fn integrates_z_power_exactly() {
        // ∫ z^6 dσ = 4π / 7
        let rule = SurfaceRule::for_degree(6);
        let v = rule.integrate(|p| p.theta.cos().powi(6));
        assert!((v - 4.0 * std::f64::consts::PI / 7.0).abs() < 1e-13);
    }
}
