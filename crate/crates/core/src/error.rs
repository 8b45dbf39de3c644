use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial context mismatch: {0}")]
    ContextMismatch(String),
    #[error("rank mismatch: expected n = {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("irrational spectrum: {0}")]
    IrrationalSpectrum(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Parse errors map to exit code 2 in the CLI; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
