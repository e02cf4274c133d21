use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid character table: {0}")]
    InvalidTable(String),

    #[error("label {label} does not belong to the {table} dual")]
    LabelMismatch { label: String, table: String },

    #[error("multiplicity of {label} is {value}, not within 1e-6 of an integer")]
    NonIntegralMultiplicity { label: String, value: f64 },

    #[error("multiplicity overflow while fusing")]
    MultiplicityOverflow,

    #[error("weight has no value for label {0} and no default")]
    UnlistedLabel(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("weights live on different duals")]
    TableMismatch,

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("dual is infinite: {0}")]
    InfiniteDual(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse label {0:?}")]
    BadLabel(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
