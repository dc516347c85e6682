use thiserror::Error;

/// Errors produced by every module of the crate.
///
/// Element numbers carried in the payloads are 1-based, as printed to users.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a cycle through element {element}")]
    CycleDetected { element: usize },

    #[error("element index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("set is not an antichain: {0} and {1} are comparable")]
    NotAnAntichain(usize, usize),

    #[error("set is not a downset: contains {upper} but not {lower}")]
    NotADownset { lower: usize, upper: usize },

    #[error("instance exceeds cap of {cap} ({what})")]
    CapExceeded { cap: usize, what: &'static str },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("poset is not 2-dimensional")]
    NotTwoDimensional,

    #[error("order is not a linear extension of the poset")]
    NotALinearExtension,

    #[error("linear extension is separating")]
    SeparatingExtension,

    #[error("revlex comparison of a set with itself")]
    EqualSets,

    #[error("lattice extensions are over different ground sets")]
    MismatchedGroundSets,

    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
