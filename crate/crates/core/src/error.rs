//! Error type shared by the whole toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown identifier `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("expected {expected} substitution images, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("{what}: expected homogeneous of degree {expected}")]
    DegreeMismatch { what: &'static str, expected: usize },

    #[error("input must be homogeneous: {what}")]
    Inhomogeneous { what: &'static str },

    #[error("presentation forms have a common projective zero; witness ideal ({})", witness.join(", "))]
    CommonZero { witness: Vec<String> },

    #[error("the four sections are linearly dependent")]
    DependentSections,

    #[error(
        "the constant parts of the quadruple do not span; morphism outside theorem hypotheses"
    )]
    NonSpanningSections,

    #[error("the section quadruple does not generate the bundle (the six quadrics share a zero)")]
    NotGenerating,

    #[error("resource limit exceeded after {steps} reduction steps")]
    ResourceLimit { steps: u64 },

    #[error("expected projective dimension {expected}, found {found}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("conic has rank {found}, expected rank {expected}")]
    ConicRank { expected: usize, found: usize },

    #[error("zero polynomial where a nonzero form is required")]
    ZeroInput,

    #[error("invalid secant line: {0}")]
    InvalidSecantLine(String),

    #[error("all fiber samples were non-generic; increase trials")]
    UnstableFiber,

    #[error("unsupported input shape: {0}")]
    Unsupported(String),

    #[error("verification failed [{assertion}]: {detail}")]
    VerificationFailed { assertion: String, detail: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
