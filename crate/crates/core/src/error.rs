use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix entry ({row}, {col}) is not an integer")]
    NonIntegerEntry { row: usize, col: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: i64, modulus: i64 },
    #[error("word is not positive")]
    NotPositive,
    #[error("no inverse available for {0}")]
    MissingInverse(String),
    #[error("axiom check failed: {0}")]
    AxiomFailure(String),
    #[error("matrix is not invertible over the ring")]
    NotInvertible,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable tag of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NonIntegerEntry { .. } => "non_integer_entry",
            Error::Parse(_) => "parse",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::NonUnit { .. } => "non_unit",
            Error::NotPositive => "not_positive",
            Error::MissingInverse(_) => "missing_inverse",
            Error::AxiomFailure(_) => "axiom_failure",
            Error::NotInvertible => "not_invertible",
            Error::Malformed(_) => "malformed",
            Error::Unsupported(_) => "unsupported",
            Error::Overflow(_) => "overflow",
        }
    }
}
