//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller handed us something structurally wrong (shape mismatch, label
    /// out of range, k >= n, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration value is out of its documented range or inconsistent.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A numeric failure during compute (non-finite activation, NaN gradient).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Checkpoint or matrix file does not start with the expected magic bytes.
    #[error("magic mismatch in {path}: expected {expected:?}")]
    MagicMismatch { path: String, expected: String },

    /// File ended before the declared payload was read.
    #[error("truncated file {path}: {detail}")]
    Truncated { path: String, detail: String },

    /// Stored tensor shapes disagree with the embedded config.
    #[error("shape mismatch in {path}: {detail}")]
    ShapeMismatch { path: String, detail: String },

    #[error("malformed data in {path}: {detail}")]
    Malformed { path: String, detail: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn invalid_config(msg: impl Into<String>) -> Self {
        Error::InvalidConfig(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
