use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("weight mismatch: expected {expected}, got {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("the empty partition has no {0}")]
    EmptyPartition(&'static str),

    #[error("invalid hook coordinates: {0}")]
    HookCoordinates(String),

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: String,
    },

    #[error("value is not an integer class function (coefficient at {0} has a non-integral class value)")]
    NonIntegral(String),

    #[error("{0} is not a non-negative integer multiplicity")]
    NotAMultiplicity(String),

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("enumeration of {n} points exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("compute budget exceeded: {0}")]
    Budget(String),

    #[error("interrupted")]
    Interrupted,
}

pub type Result<T> = std::result::Result<T, Error>;
