//! Steklov eigenpairs of the penalized curl-curl problem on the unit ball,
//!
//! `curl curl E - θ grad div E - k^2 E = 0` in `B`, `E·ν = 0` and
//! `ν × curl E = λ E_T` on the sphere,
//!
//! in closed form for `k^2 ≠ 0`, `θ > 0`, with verifiers for every identity
//! the closed forms rest on.

mod boundary;
mod eigenvalues;
mod mode;
mod radial;
mod residuals;
mod weak;

pub use boundary::{
    solve_boundary_modal, zero_in_spectrum, ModalBoundaryData, WeightedMode, WitnessKind, ZeroWitness,
    ZERO_EIGENVALUE_TOL,
};
pub use eigenvalues::{
    lambda1, lambda1_theta1_alt, lambda2, principal_k, BESSEL_RESONANCE_TOL, REALITY_TOL, RESONANCE_TOL,
};
pub use mode::{
    divergence_closed_form, divergence_field, eigenfield, eigenfield_curl, Family, ModalFields, SteklovMode,
};
pub use radial::{radial_profiles, RadialJets, RadialKind, RadialPair};
pub use residuals::{
    residual_div_boundary, residual_div_helmholtz, residual_fourth_order, residual_fourth_order_pair,
    residual_system, verify_steklov_bc, Residual,
};
pub use weak::{default_orders, verify_weak_identity, weak_terms, WeakTerms, COARSENESS_LIMIT, REFINEMENT_STEP};
