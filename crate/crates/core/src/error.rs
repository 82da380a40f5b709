use thiserror::Error;

/// Everything that can go wrong in `grr-core`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("row {0} not a permutation")]
    NotLatinRow(usize),
    #[error("column {0} not a permutation")]
    NotLatinColumn(usize),
    #[error("no identity element in table")]
    MissingIdentity,
    #[error("element {0} has no inverse")]
    MissingInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown group descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("group of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("{0} is not a subgroup")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("set is not inverse-closed")]
    NotInverseClosed,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group action is not transitive")]
    Intransitive,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A statement that is a theorem failed on concrete data. Never swallowed.
    #[error("proof violation: {0}")]
    ProofViolation(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
