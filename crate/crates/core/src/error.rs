use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    OutsideRectangle {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("invalid lattice path: {0}")]
    InvalidLatticePath(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("budget exceeded: {what} is {got}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid label {label} for {group}")]
    InvalidLabel { group: String, label: String },

    #[error("input is not a character: {0}")]
    NotACharacter(String),

    #[error("malformed levi weight: {0}")]
    MalformedWeight(String),

    #[error("window overflow while reducing {0}")]
    WindowOverflow(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("invalid lie structure: {0}")]
    InvalidStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
