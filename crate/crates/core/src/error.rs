use thiserror::Error;

/// Syntax error in the textual term format, located by character offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

/// Violations of the index and size bounds of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("monoid size must be at least {min}, got {n}")]
    SizeTooSmall { n: usize, min: usize },
    #[error("index {index} out of range: expected 1 <= index <= {max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("block h[{upper},{lower}]: lower index exceeds upper index")]
    InvertedBlock { upper: usize, lower: usize },
    #[error("invalid normal form: {0}")]
    NotNormal(String),
    #[error("unbalanced parenthetical word: {0}")]
    Unbalanced(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("at position {position}: {source}")]
    DomainAt {
        position: usize,
        #[source]
        source: DomainError,
    },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error("malformed diagram json: {0}")]
    Json(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    /// Character offset for errors that come from textual input.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Parse(e) => Some(e.position),
            Error::DomainAt { position, .. } => Some(*position),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
