//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Shape mismatch between operands; names both shapes.
    #[error("{op}: dimension mismatch: {lhs} vs {rhs}")]
    Dim {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    /// Invalid configuration value (bad sizes, flags, intervals).
    #[error("configuration error: {0}")]
    Config(String),

    /// An API contract was violated (e.g. non-scalar loss passed to backward).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A computation produced NaN/Inf where finite values are required.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// A kernel construction collapsed to an unusable atom.
    #[error("degenerate kernel: {0}")]
    DegenerateKernel(String),

    /// Malformed on-disk artifact (tensor dump, sidecar, checkpoint).
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(op: &'static str, lhs: &[usize], rhs: &[usize]) -> Self {
        Error::Dim {
            op,
            lhs: format!("{lhs:?}"),
            rhs: format!("{rhs:?}"),
        }
    }
}
