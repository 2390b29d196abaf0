//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when evaluating metric data.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum FrlError {
    /// y = 0 is outside the slit tangent bundle; no metric quantity is defined there.
    #[error("slit tangent bundle violated: y = 0")]
    SlitTangentBundle,

    /// The Riemannian data failed its positive-definiteness check at an evaluation point.
    #[error("metric not positive-definite at x (pivot {pivot:.3e} below threshold {threshold:.3e})")]
    NotPositiveDefinite { pivot: f64, threshold: f64 },

    /// A family-specific admissibility condition failed at (F, beta).
    #[error("domain violation for {family}: {condition} (F = {f:.6}, beta = {beta:.6})")]
    DomainViolation {
        family: &'static str,
        condition: &'static str,
        f: f64,
        beta: f64,
    },

    /// A scalar in the inverse cascade is too close to zero to divide by.
    #[error("singular cascade scalar {name} = {value:.3e}")]
    SingularCascade { name: &'static str, value: f64 },

    /// A non-finite value appeared mid-computation.
    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    /// Invalid argument (dimension mismatch, bad parameter, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Rejection sampling exhausted its attempt budget.
    #[error("admissible sampling exceeded {attempts} attempts; {hint}")]
    SamplingExhausted { attempts: usize, hint: String },
}

pub type Result<T> = std::result::Result<T, FrlError>;

impl FrlError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        FrlError::InvalidInput(msg.into())
    }
}
