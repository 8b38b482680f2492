use thiserror::Error;

use crate::cartan::AlgebraId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: &'static str, rank: usize },
    #[error("expected {expected} labels for {algebra}, got {got}")]
    LabelLength {
        algebra: AlgebraId,
        expected: usize,
        got: usize,
    },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight {0:?} is not strictly dominant")]
    NotStrictlyDominant(Vec<i64>),
    #[error("operation requires {expected}, got {got}")]
    WrongAlgebra { expected: String, got: AlgebraId },
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(AlgebraId, AlgebraId),
    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("orbit of size {size} exceeds cap {cap}")]
    OrbitTooLarge { size: u64, cap: u64 },
    #[error("specialization point is degenerate: {0}")]
    DegeneratePoint(String),
    #[error("specialization point has {got} coordinates, {expected} required")]
    PointLength { expected: usize, got: usize },
    #[error("denominator alternant vanishes at this point")]
    SingularPoint,
    #[error("no node ordering of the E7 diagram reproduces the reference orbit")]
    NoConsistentLabeling,
    #[error("{0} node orderings of the E7 diagram reproduce the reference orbit")]
    AmbiguousLabeling(usize),
    #[error("coset table: {0}")]
    TableParse(String),
    #[error("evaluation matrix is rank deficient ({rank} < {unknowns})")]
    RankDeficient { rank: usize, unknowns: usize },
    #[error("overdetermined system is inconsistent")]
    Inconsistent,
    #[error("coupling coefficient for {weight:?} is not an integer: {value}")]
    NonIntegerSolution { weight: Vec<i64>, value: String },
    #[error("coupling coefficient for {weight:?} is negative: {value}")]
    NegativeCoefficient { weight: Vec<i64>, value: String },
    #[error("top weight must have multiplicity 1, got {0}")]
    TopMultiplicity(String),
    #[error("dimension identity fails: {lhs} != {rhs}")]
    DimensionMismatch { lhs: u128, rhs: u128 },
    #[error("verification at held-out point {0} failed")]
    HeldOutMismatch(usize),
    #[error("representation too large for the oracle (dimension {0})")]
    TooLarge(u128),
    #[error("peeling left a negative remainder at {0:?}")]
    NegativeRemainder(Vec<i64>),
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
