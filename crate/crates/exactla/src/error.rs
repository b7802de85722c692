use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero or by a zero divisor")]
    ZeroDivisor,
    #[error("element is not a unit")]
    NotUnit,
    #[error("integer {0} is not invertible in this ring")]
    IntegerNotInvertible(u64),
    #[error("ideal is not triangular: {0}")]
    NonTriangularIdeal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("DFT unavailable: {0}")]
    DftUnavailable(String),
    #[error("constant term of the series is not a unit")]
    NonUnitConstantTerm,
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("diagonal entry {0} is not invertible")]
    NotInvertibleDiagonal(usize),
    #[error("matrix is not surjective (row {0} has no pivot)")]
    NotSurjective(usize),
    #[error("exact division failed: {0}")]
    ExactDivisionFailed(String),
    #[error("zero connected minor of order {order} at index {index}")]
    ZeroConnectedMinor { order: usize, index: usize },
    #[error("zero dominant principal minor of order {0}")]
    ZeroDominantMinor(usize),
    #[error("Krylov sequence of e1 does not span the space")]
    NotCyclic,
    #[error("adjoint of lambda*I - A vanishes")]
    AdjointVanishes,
    #[error("sequence is identically zero")]
    ZeroSequence,
    #[error("Hankel system is singular")]
    SingularHankelSystem,
    #[error("retries exhausted: best degree {best}, target {target}")]
    RetriesExhausted { best: usize, target: usize },
    #[error("no candidate within bound")]
    NoCandidateWithinBound,
    #[error("prime pool exhausted")]
    PrimePoolExhausted,
    #[error("Gram coefficient a_{0} is zero")]
    GramCoefficientZero(usize),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("invalid group parameters: {0}")]
    InvalidGroupParams(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
