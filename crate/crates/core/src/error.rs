use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid space parameters: {0}")]
    InvalidParams(String),
    #[error("malformed space label: {0}")]
    BadLabel(String),
    #[error("Gamma argument {0} is not positive")]
    GammaPole(f64),
    #[error("generalized Pochhammer symbol is not a polynomial: {0}")]
    NonPolynomial(String),
    #[error("too few samples: need at least {needed}, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("series does not converge fast enough: |t| = {0}")]
    SlowConvergence(f64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = core::result::Result<T, Error>;
