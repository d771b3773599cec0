use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid 012-string: {0}")]
    InvalidString(String),
    #[error("shape out of range: {0}")]
    ShapeOutOfRange(String),
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("multiset difference undefined: {0}")]
    Multiplicity(String),
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("descent condition violated: {0}")]
    Descent(String),
    #[error("boundary strings have different content: {0}")]
    ContentMismatch(String),
    #[error("undefined (dimension condition): {0}")]
    DimensionCondition(String),
    #[error("engines disagree: puzzle = {puzzle}, oracle = {oracle}")]
    EngineDisagreement { puzzle: u64, oracle: u64 },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("unsupported family: {0}")]
    Family(String),
}

pub type Result<T> = std::result::Result<T, Error>;
