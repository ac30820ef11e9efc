use super::vector::vector_a_all;
use super::{BallPoint, ModeIndex, SurfaceRule, Tau, Vec3};

/// Modal coefficients `E^τ_n(r_i)` of a sampled vector field.
#[derive(Debug, Clone)]
pub struct ModalExpansion {
    pub modes: Vec<ModeIndex>,
    pub radii: Vec<f64>,
    /// `coefficients[mode][radius] = [E^1, E^2, E^3]`
    pub coefficients: Vec<Vec<[f64; 3]>>,
}

impl ModalExpansion {
    pub fn coefficient(&self, n: &ModeIndex, tau: Tau, radius_index: usize) -> Option<f64> {
        let i = self.modes.iter().position(|m| m == n)?;
        Some(self.coefficients[i][radius_index][tau.index()])
    }

    /// Reconstructs the truncated expansion at `x`.
    pub fn reconstruct(&self, radius_index: usize, direction: &super::SurfacePoint) -> Vec3 {
        self.modes
            .iter()
            .zip(&self.coefficients)
            .map(|(n, c)| vector_a_all(n, direction).combine(c[radius_index]).to_cartesian(direction))
            .sum()
    }

    /// Largest coefficient modulus over all modes other than `keep`.
    pub fn max_other(&self, keep: &[ModeIndex]) -> f64 {
        self.modes
            .iter()
            .zip(&self.coefficients)
            .filter(|(n, _)| !keep.contains(n))
            .flat_map(|(_, c)| c.iter().flat_map(|v| v.iter().map(|x| x.abs())))
            .fold(0.0, f64::max)
    }
}

/// Projects `sampler` onto `{A_τn : l <= l_max}` on each sphere `|x| = r_i`.
pub fn expand_field(sampler: &dyn Fn(Vec3) -> Vec3, l_max: usize, radial_nodes: &[f64]) -> ModalExpansion {
    let modes = ModeIndex::enumerate(0, l_max);
    let rule = SurfaceRule::for_degree(2 * l_max + 2);
    let mut coefficients = vec![vec![[0.0; 3]; radial_nodes.len()]; modes.len()];
    for (ri, &r) in radial_nodes.iter().enumerate() {
        for (p, w) in rule.points() {
            let x = BallPoint { r, direction: *p }.to_cartesian();
            let local = sampler(x).to_local(p);
            for (mi, n) in modes.iter().enumerate() {
                let a = vector_a_all(n, p);
                for (c, a_tau) in coefficients[mi][ri].iter_mut().zip(&a.a) {
                    *c += w * local.dot(a_tau);
                }
            }
        }
    }
    ModalExpansion { modes, radii: radial_nodes.to_vec(), coefficients }
}
