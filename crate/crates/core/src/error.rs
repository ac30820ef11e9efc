use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("recurrence values exceed the representable range (l = {l}, |z| = {modulus:.3e})")]
    Overflow { l: usize, modulus: f64 },

    #[error("argument {0} lies outside [-1, 1]")]
    Domain(f64),

    #[error("invalid mode: {0}")]
    InvalidMode(String),

    #[error("finite-difference step {h:.3e} is too large for radius {r:.3e}")]
    StepTooLarge { h: f64, r: f64 },

    #[error("k^2 = {k2} is a Dirichlet resonance for l = {l} (|denominator| = {denominator:.3e}, scale {scale:.3e})")]
    DirichletResonance { l: usize, k2: f64, denominator: f64, scale: f64 },

    #[error("eigenvalue is not real: {re} + {im}i")]
    NonRealEigenvalue { re: f64, im: f64 },

    #[error("eigenvalue of mode l = {l} vanishes; the boundary problem is not solvable by modal expansion")]
    ZeroEigenvalue { l: usize },

    #[error("quadrature too coarse: value changed by {relative_change:.3e} when orders increased")]
    QuadratureTooCoarse { relative_change: f64 },

    #[error("scan window (0, {window}] holds {found} roots, {requested} requested")]
    ScanExhausted { window: f64, found: usize, requested: usize },

    #[error("length mismatch: {0} coefficients vs {1} eigenvalues")]
    LengthMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
