use thiserror::Error;

use crate::solve::AlignmentSolution;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown marker `{0}`")]
    UnknownMarker(String),

    #[error("marker sets of the two operands differ")]
    MarkerSetMismatch,

    #[error("order is {found}, expected one of: {expected}")]
    FamilyMismatch {
        expected: &'static str,
        found: String,
    },

    /// Enumeration stopped after `count` items. `best` carries the best
    /// solution seen so far when the enumeration was part of an optimization.
    #[error("enumeration cap exceeded after {count} items")]
    CapExceeded {
        count: u64,
        best: Option<Box<AlignmentSolution>>,
    },

    #[error("input too large: {what} = {size} exceeds the limit {limit}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("vertex {vertex} has degree {degree} > 3")]
    DegreeViolation { vertex: usize, degree: usize },

    #[error("variable x{var} occurs {count} times (expected exactly 3)")]
    OccurrenceCount { var: usize, count: usize },

    #[error("clause {clause} contains variable x{var} twice")]
    DuplicateVariable { clause: usize, var: usize },

    #[error("all literals of variable x{var} have the same polarity")]
    UniformPolarity { var: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A repair step lowered the number of adjacencies. This means a bug in a
    /// reduction, never bad input.
    #[error("repair decreased adjacencies from {before} to {after}")]
    RepairRegression { before: usize, after: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidArgument(message.into())
    }

    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
