use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?}: {message}")]
pub struct ParseError {
    pub input: String,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, message: impl Into<String>) -> Self {
        Self {
            input: input.to_string(),
            message: message.into(),
        }
    }
}

/// Precondition and consistency failures raised by the combinatorial
/// operations.
///
/// The `*Violation` and `Counterexample` variants signal that an internal
/// postcondition failed. They are surfaced rather than repaired.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonempty multisegment")]
    EmptyInput,
    #[error("{0} is not a ladder multisegment")]
    NotALadder(String),
    #[error("weight {0} has a negative coefficient")]
    NegativeWeight(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence {0:?} has equal neighbours")]
    NotAdmissible(Vec<i64>),
    #[error("support of {weight} is not contained in [-{bound}, {bound}]")]
    SupportOutOfRange { weight: String, bound: i64 },
    #[error("BZ sequence parameter must be positive, got {0}")]
    NonPositiveBound(i64),
    #[error("segment {segment} begins at {begin}, which must be empty for this derivative")]
    BeginOccupied { segment: String, begin: i64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("pair is not admissible at row {row}, column {col}")]
    NotAdmissiblePair { row: usize, col: usize },
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("pair is not permissible: {0}")]
    NotPermissible(String),
    #[error("multiplicity table keys have different weights: {0}")]
    WeightMismatch(String),
    #[error("re-keying collided on {0}")]
    KeyCollision(String),
    #[error("size guard exceeded: {size} > {limit}")]
    SizeGuard { size: usize, limit: usize },
    #[error("multicharge {0:?} is not weakly decreasing")]
    BadMulticharge(Vec<i64>),
    #[error("multipartition is not restricted for the multicharge")]
    NotRestricted,
    #[error("counterexample: {0}")]
    Counterexample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
