use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("parts are not weakly decreasing: {0}")]
    PartOrder(String),

    #[error("partition parts must be positive: {0}")]
    ZeroPart(String),

    #[error("degree mismatch: expected S_{expected}, found S_{found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("rank {0} is not supported (only n <= 2 is known in closed form)")]
    UnsupportedRank(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pattern error: {0}")]
    Pattern(String),

    #[error("pattern file line {line}: {message}")]
    PatternFile { line: usize, message: String },
}

impl Error {
    pub(crate) fn syntax(column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            column,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }

    pub(crate) fn pattern(message: impl Into<String>) -> Self {
        Error::Pattern(message.into())
    }
}
