use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("decay admits |f| >= 1 for curve indices {indices:?}")]
    AmplitudeTooLarge { indices: Vec<usize> },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("masks with no cells: {0:?}; run verify() first")]
    EmptyMasks(Vec<String>),

    #[error("{path}: {reason}")]
    Ingest { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error("image encoding failed: {0}")]
    Image(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
