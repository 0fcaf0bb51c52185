use num_bigint::BigInt;
use thiserror::Error;

use crate::IntVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("covector {0} is not primitive")]
    NotPrimitive(IntVector),
    #[error("covector {0} must have strictly positive coordinates")]
    NonPositiveCovector(IntVector),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("polytope is not parallel to the kernel of {0}")]
    NotParallel(IntVector),
    #[error("empty point set")]
    Empty,
    #[error("simplex leg {0} is not positive")]
    NonPositiveLeg(i64),
    #[error("point {0} has a negative coordinate")]
    NegativeCoordinate(IntVector),
    #[error("unbounded complement: no generator on axis {axis}")]
    UnboundedComplement { axis: usize },
    #[error("clipping constant {clip} is below the maximal generator coordinate sum {required}")]
    ClipTooSmall { clip: BigInt, required: BigInt },
    #[error("algorithms disagree: inclusion-exclusion {ie}, support formula {support} on {tuple}")]
    OracleMismatch {
        ie: BigInt,
        support: BigInt,
        tuple: String,
    },
    #[error("tuple has mixed volume {found}, expected {expected}")]
    VolumeMismatch { expected: BigInt, found: BigInt },
    #[error("property violated: {0}")]
    TheoremViolation(String),
    #[error("search space of {candidates} candidates exceeds the cap {cap}")]
    SearchTooLarge { candidates: u128, cap: u128 },
    #[error("{0}")]
    Parse(String),
}
