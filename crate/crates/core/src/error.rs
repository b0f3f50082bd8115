use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("inadmissible Hilbert function {values:?}: {reason}")]
    Inadmissible { values: Vec<u32>, reason: String },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("assignment has {got} values but the cell has {expected} parameters")]
    MissingParameter { expected: usize, got: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("degree cutoff {limit} exceeded during standard basis computation")]
    DegreeCutoff { limit: u32 },

    #[error("ideal is not zero-dimensional at the origin")]
    NotZeroDimensional,

    #[error("stratum d = {d} outside admissible range {lo}..={hi}")]
    StratumRange { d: usize, lo: usize, hi: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
