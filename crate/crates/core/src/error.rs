use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {pos} in {input:?}: {message}")]
    Parse {
        input: String,
        pos: usize,
        message: String,
    },

    #[error("generator index {index} out of range 0..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parabolic generator set must be a proper subset of 0..={0}")]
    NotProperSubset(usize),

    #[error("basis index {0:?} is excluded by the variant")]
    ExcludedIndex(Vec<i64>),

    #[error("element is not in the expected span: {0}")]
    NotInSpan(String),

    #[error("weight idempotent undefined: {0}")]
    EigenvalueCollision(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
