use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length error: {0}")]
    Length(String),

    #[error("node of length {length} is not on any declared level")]
    LevelMismatch { length: usize },

    #[error("arguments must be distinct")]
    EqualInput,

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("invalid coding tree: {0}")]
    InvalidCodingTree(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exhaustive search needs {required} cases, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("unknown universe `{0}`")]
    UnknownUniverse(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
