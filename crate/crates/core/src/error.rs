use thiserror::Error;

/// Errors raised by constructors, the catalog and the algebra file format.
///
/// Mathematical verdicts (a failed identity, a missing orbit witness) are
/// never errors; they are reported through the result types of the checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational `{0}`: expected reduced \"p\" or \"p/q\" with q > 0")]
    InvalidRational(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("non-rational coefficient `{value}` in product [{left},{right}]")]
    NonRationalCoefficient {
        left: String,
        right: String,
        value: String,
    },

    #[error("duplicate product entry [{0},{1}]")]
    DuplicateProduct(String, String),

    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
