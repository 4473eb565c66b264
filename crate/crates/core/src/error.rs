use thiserror::Error;

/// Every failure the library can report.
///
/// Domain errors name the condition that failed so a caller can tell which
/// precondition of a map was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("overlined part {0} appears more than once")]
    DuplicateOverline(u32),

    #[error("parts must be positive")]
    ZeroPart,

    #[error("invalid parameters k={k}, i={i}: need k >= 2 and 1 <= i <= k")]
    InvalidParams { k: u32, i: u32 },

    #[error("invalid marked profile {0:?}: entries must be weakly decreasing and have k-1 entries")]
    InvalidProfile(Vec<u32>),

    #[error("{0}")]
    InvalidPartition(String),

    #[error("domain error ({condition}): {detail}")]
    Domain { condition: &'static str, detail: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("marking mismatch after {0}: carried marks differ from the recomputed marking")]
    MarkingMismatch(&'static str),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn domain(condition: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            condition,
            detail: detail.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
