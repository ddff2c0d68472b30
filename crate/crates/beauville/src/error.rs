use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed element: {0}")]
    Malformed(String),
    #[error("capacity exceeded: {what} grew past {cap}")]
    Overflow { what: &'static str, cap: usize },
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
