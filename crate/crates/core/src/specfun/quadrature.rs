use serde::{Deserialize, Serialize};

use super::legendre::legendre_p;

/// Gauss-Legendre rule on (-1, 1): sorted interior nodes, positive weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_{-1}^{1} f(x) dx`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Nodes and weights mapped affinely onto `(a, b)`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

/// `count`-point Gauss-Legendre rule by Newton iteration on `P_count`.
///
/// Exact for polynomials of degree `2 count - 1`. Supported up to 4096 nodes.
pub fn gauss_legendre(count: usize) -> QuadratureRule {
    assert!(count >= 1, "a quadrature rule needs at least one node");
    let n = count;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // Tricomi initial guess for the i-th largest root.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut deriv = 0.0;
        for _ in 0..100 {
            let (p, dp) = legendre_p(n, x);
            let dx = p / dp;
            x -= dx;
            deriv = dp;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
        let (_, dp) = legendre_p(n, x);
        if dp.is_finite() {
            deriv = dp;
        }
        let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    QuadratureRule { nodes, weights }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_rule() {
        let rule = gauss_legendre(2);
        let r = 1.0 / 3f64.sqrt();
        assert!((rule.nodes[0] + r).abs() < 1e-15 && (rule.nodes[1] - r).abs() < 1e-15);
        assert!((rule.weights[0] - 1.0).abs() < 1e-15 && (rule.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn one_point_rule() {
        let rule = gauss_legendre(1);
        assert_eq!(rule.nodes, vec![0.0]);
        assert!((rule.weights[0] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn degree_fourteen_with_eight_nodes() {
        let rule = gauss_legendre(8);
        assert!((rule.integrate(|x| x.powi(14)) - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn mapped_rule_integrates_on_interval() {
        let rule = gauss_legendre(5);
        let v: f64 = rule.mapped(0.0, 1.0).map(|(x, w)| w * x * x).sum();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
    }
}
