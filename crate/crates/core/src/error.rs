use thiserror::Error;

/// Domain errors. The `code` strings are part of the CLI's JSON error schema.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("representation is not semistable")]
    Unstable,
    #[error("input outside the stored table domain: {0}")]
    Range(String),
    #[error("representation is not strictly semistable")]
    NotStrictlySemistable,
    #[error("matrix is singular")]
    Singular,
    #[error("zero binary form has no resultant")]
    ZeroForm,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Unstable => "ERR_UNSTABLE",
            Error::Range(_) => "ERR_RANGE",
            Error::NotStrictlySemistable => "ERR_NOT_STRICTLY_SEMISTABLE",
            Error::Singular => "ERR_SINGULAR",
            Error::ZeroForm => "ERR_ZERO_FORM",
            Error::Shape(_) => "ERR_SHAPE",
            Error::Parse(_) => "ERR_PARSE",
            Error::Internal(_) => "ERR_INTERNAL",
        }
    }

    /// Parse failures are usage errors; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Shape(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
