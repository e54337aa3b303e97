use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {0}")]
    InvalidType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionError { expected: usize, got: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("unknown pair {0}")]
    UnknownPair(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("embedding failed validation: {0}")]
    InvalidEmbedding(String),
    #[error("{0:?} is not a primitive nonzero vector")]
    NotPrimitive(Vec<i64>),
    #[error("cone is not pointed")]
    NotPointed,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
