use thiserror::Error;

use crate::ring::ScalarMode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed scalar modes: {left} and {right}")]
    ModeMismatch { left: ScalarMode, right: ScalarMode },

    #[error("integer k must be at least 1, got {0}")]
    InvalidK(String),

    #[error("{id}: {reason}")]
    Arity { id: &'static str, reason: String },

    #[error("{id}: parameter {axis}={value} outside the domain ({axis} >= {min})")]
    Domain {
        id: &'static str,
        axis: char,
        value: i64,
        min: i64,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
