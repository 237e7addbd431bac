use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("negative weight")]
    NegativeWeight,
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("degree too large: {0}")]
    DegreeTooLarge(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("series has no invertible linear term")]
    NonUnitLinearTerm,
    #[error("pole at infinity")]
    PoleAtInfinity,
    #[error("singular linear system")]
    SingularSystem,
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("box does not isolate a single root")]
    BoxNotIsolating,
    #[error("polynomial is not real-rooted")]
    NotRealRooted,
    #[error("degree gap too large for interlacing")]
    DegreeGap,
    #[error("odd part in s: {0}")]
    OddPartInS(String),
    #[error("recursion depth exceeded: {0}")]
    DepthExceeded(String),
    #[error("expansion point is a pole")]
    ExpansionPointPole,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
