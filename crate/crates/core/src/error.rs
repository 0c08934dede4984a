use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed type label {0:?}: expected a family letter A-G followed by a rank, e.g. E8")]
    MalformedLabel(String),

    #[error("unknown family {0:?}: valid families are A, B, C, D, E, F, G")]
    UnknownFamily(String),

    #[error("rank {rank} out of range for family {family}: valid range is {valid}")]
    RankOutOfRange {
        family: char,
        rank: usize,
        valid: String,
    },

    #[error("{0} is not a root of the ambient system")]
    NotARoot(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{0} has rank 1: no quaternionic node grading")]
    NoQuaternionicGrading(String),

    #[error("not a closed subsystem: {0}")]
    NotClosed(String),

    #[error("unclassifiable subsystem: {0}")]
    Unclassifiable(String),

    #[error("toral element has {got} coordinates, ambient rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("denominator must be at least 1")]
    ZeroDenominator,

    #[error("rank {rank} exceeds the enumeration cap {cap}; raise it with --rank-cap")]
    RankCapExceeded { rank: usize, cap: usize },

    #[error("golden data: {0}")]
    Golden(String),

    #[error("invalid Cartan type label {0:?}")]
    BadCartanType(String),
}

pub type Result<T> = std::result::Result<T, Error>;
