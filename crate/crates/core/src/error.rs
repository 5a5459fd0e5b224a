use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Mathematical failures that are *answers* (a failed tilting condition, a
/// cross-check mismatch) are reported in result records, never through this
/// type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A computation needs a point or root outside the ground field.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("projective resolution exceeded the length bound {bound}")]
    ResolutionBound { bound: usize },

    /// Splitting-type recovery did not stabilise inside its degree window.
    #[error("degree window unstable: {0}")]
    WindowInstability(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
