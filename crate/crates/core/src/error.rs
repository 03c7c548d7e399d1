use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` and `UnknownLabel` are input errors, `Domain` is a violated
/// precondition, and `Internal` marks a failed self-check that should never
/// fire on valid input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),

    #[error("{0}")]
    Domain(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// True for errors caused by malformed or inconsistent user input.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
