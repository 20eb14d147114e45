use thiserror::Error;

use crate::ringcore::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("operands belong to different polynomial rings")]
    ContextMismatch,

    #[error("exponent overflow: {0}")]
    ExponentOverflow(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The cover ideals of the Frobenius-map generators do not sum to the unit ideal.
    #[error("generator cover incomplete: the cover ideals sum to {sum}")]
    CoverIncomplete { sum: String },

    #[error("u = {u} is not in (J^[p] : J) ∩ (Omega^[p] : Omega)")]
    UNotInModule { u: String },

    #[error("chain did not stabilize within {max_e} steps")]
    NoStabilization { max_e: usize },

    #[error("internal assertion failed: {0}")]
    Internal(String),
}
