use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// The variants map onto the CLI exit codes: `Parse` and `Domain` are input
/// errors, `Capacity`, `VertexLimit` and `SearchLimit` are limit errors, and
/// `Verification` signals an internal bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Domain(String),
    #[error("capacity exceeded: {what} exceeds the cap of {cap}")]
    Capacity { what: String, cap: usize },
    #[error("graph has {n} vertices, engine limit is {limit}")]
    VertexLimit { n: usize, limit: usize },
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by a limit or cap rather than by bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. } | Error::VertexLimit { .. } | Error::SearchLimit(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
