use thiserror::Error;

/// Errors raised by word arithmetic, code construction and the exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: expected (alpha={}, beta={}), found (alpha={}, beta={})", expected.0, expected.1, found.0, found.1)]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("alpha + beta must be positive")]
    EmptyShape,

    #[error("invalid word literal at column {column}: {reason}")]
    Literal { column: usize, reason: String },

    #[error(
        "size cap exceeded while computing {what}: projected size {bound} exceeds limit {limit}"
    )]
    SizeCap {
        what: &'static str,
        bound: u128,
        limit: u128,
    },

    #[error("search cap exceeded: {bound} permutation pairs exceed limit {limit}")]
    SearchCap { bound: u128, limit: u128 },

    #[error("{word} is not a codeword of the parent code")]
    NotMember { word: String },

    #[error("subcode must be nonzero and proper")]
    ImproperSubcode,

    #[error("operation requires a nonzero code")]
    ZeroCode,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("replication factor must be positive")]
    ZeroReplication,

    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
