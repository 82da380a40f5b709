use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Core(#[from] grr_core::Error),
    #[error("{what} exceeds the cap of {limit} (got {got})")]
    Cap { what: &'static str, got: usize, limit: usize },
    #[error("unknown suite id {0:?}")]
    UnknownSuite(String),
    #[error("manifest line {line}: {msg}")]
    Manifest { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, CensusError>;
