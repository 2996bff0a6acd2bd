use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("function is not in ker D_(z,w): residual norm {residual:e}")]
    NotInSubspace { residual: f64 },

    #[error("series is not slice-i invariant: coefficient {index} leaves C_i (off-slice magnitude {magnitude:e})")]
    NotSliceInvariant { index: usize, magnitude: f64 },

    #[error("star-exponential series did not converge within {terms} terms")]
    Divergence { terms: usize },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: String, found: String },

    #[error("nu mismatch between operands: {0} vs {1}")]
    NuMismatch(f64, f64),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn check_nu(nu: f64) -> Result<()> {
    if nu > 0.0 && nu.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("nu must be positive and finite, got {nu}")))
    }
}
