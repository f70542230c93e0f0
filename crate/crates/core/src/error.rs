use thiserror::Error;

/// Errors raised by the exact layer and the numerical quantum-metric layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("continued fraction has {available} terms, {requested} requested")]
    Depth { requested: usize, available: usize },

    #[error("comparison unresolved within depth {depth}")]
    Indeterminate { depth: usize },

    #[error("bracketing of theta unresolved at level {level}: theta equals the mediant {mediant}")]
    IndeterminateLevel { level: usize, mediant: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("axiom violation: {0}")]
    Axiom(String),

    #[error("empty quotient at level {level}")]
    EmptyQuotient { level: usize },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("ideals live over different base diagrams")]
    BaseMismatch,

    #[error("vertex index ({level},{index}) out of range")]
    IndexOutOfRange { level: usize, index: usize },

    #[error("missing trace for block {0}")]
    MissingBlockTrace(usize),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("arithmetic overflow in edge multiplicities")]
    Overflow,

    #[error("empty sequence")]
    EmptySequence,

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("non-faithful trace: weight of block {0} is not positive")]
    NonFaithfulTrace(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
