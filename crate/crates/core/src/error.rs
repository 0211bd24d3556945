use thiserror::Error;

/// Errors produced by model construction, analysis and (de)serialization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input data does not describe a well-formed object.
    #[error("structural error: {0}")]
    Structural(String),
    /// An operation was called outside its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A property guaranteed by a theorem failed to hold; this indicates a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// A self-check on constructed data failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("integer overflow in checked Smith normal form; rerun with SnfMode::Exact")]
    Overflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported format version {found:?} (expected {expected:?})")]
    Version { found: String, expected: String },
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
