use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on an argument does not hold.
    #[error("argument error: {0}")]
    Argument(String),

    /// A construction would exceed the configured size limit.
    #[error("limit error: {what} has order {order}, limit is {limit}")]
    Limit {
        what: String,
        order: String,
        limit: usize,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("corpus error at line {line}: {source}")]
    Corpus { line: usize, source: Box<Error> },

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    /// Attaches a subexpression to a limit error so the offending node is visible.
    pub(crate) fn in_context(self, what: &str) -> Self {
        match self {
            Error::Limit { order, limit, .. } => Error::Limit {
                what: what.to_string(),
                order,
                limit,
            },
            other => other,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
