use thiserror::Error;

use crate::lie::GenIndex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {0} has a negative second index")]
    NegativeSecondIndex(GenIndex),

    #[error("index {index} out of range for partition of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("partition is not sorted: part {position} is smaller than its predecessor")]
    UnsortedPartition { position: usize },

    #[error(
        "monomial contains the central generator x(1,0); use the coefficient polynomial instead"
    )]
    CentralInMonomial,

    #[error("generator {0} is not in the positive part n (requires a+i > 1)")]
    NotPositive(GenIndex),

    #[error("generator {0} is not in b- (requires a+i <= 1)")]
    NotBorelMinus(GenIndex),

    #[error("operation is undefined on the zero element")]
    ZeroElement,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ideal generator must be monic")]
    NotMonic,

    #[error("solver requires an ideal generated by z - c")]
    NonLinearIdeal,

    #[error("truncation admits no candidate partitions")]
    EmptyCandidateSet,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("partition is not supported on the sigma family for s = {s}, n = {n}")]
    NotSigmaFamily { s: i64, n: i64 },

    #[error("straightening produced a monomial with {0} factors from n; expected at most one")]
    UnexpectedNilpotentFactors(usize),
}
