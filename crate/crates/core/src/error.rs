use thiserror::Error;

use crate::graph::FamilySpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {vertices} vertices, above the {method} cap of {cap}")]
    SizeLimit {
        method: &'static str,
        vertices: usize,
        cap: usize,
    },

    #[error("{spec} is excluded from the closed-form construction: {reason}")]
    ExcludedCase { spec: FamilySpec, reason: String },

    #[error("no labeling recipe for {0}")]
    NotCovered(FamilySpec),

    #[error("no valid labeling exists")]
    Infeasible,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_parameter(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: msg.into(),
    }
}
