use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in the golden field")]
    DivisionByZero,

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("{0} has no square root in Q(sqrt5)")]
    NoExactSqrt(String),

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("structural error: {0}")]
    Structural(String),

    #[error("degenerate sphere configuration: centers span rank {rank}, need 3")]
    DegenerateConfiguration { rank: usize },

    #[error("invalid sphere system: {0}")]
    InvalidSystem(String),

    #[error("unknown polytope `{0}` (supported: tesseract, 120-cell, 600-cell)")]
    UnknownPolytope(String),

    #[error("cannot parse `{0}` as a golden-field number")]
    ParseNumber(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: line {line}: {message}")]
    ParseFile {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Attach a file path to a line-numbered parse error.
    pub(crate) fn in_file(self, path: impl Into<PathBuf>) -> Self {
        match self {
            Error::Parse { line, message } => Error::ParseFile {
                path: path.into(),
                line,
                message,
            },
            other => other,
        }
    }
}
