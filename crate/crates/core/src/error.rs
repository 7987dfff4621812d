use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate fraction")]
    DegenerateFraction,
    #[error("denominator vanishes after substituting u = q^{0}, v = q^{1}")]
    VanishingDenominator(i32, i32),
    #[error("zero polynomial has no lowest term")]
    ZeroPolynomial,
    #[error("singular system")]
    SingularSystem,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("invalid simple index {index} for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),
    #[error("group of order {0} exceeds the enumeration bound")]
    SizeBoundExceeded(u64),
    #[error("element order exceeds cap {0}")]
    OrderCapExceeded(usize),
    #[error("element carries no reduced word")]
    MissingWord,
    #[error("recipe broken: {0}")]
    RecipeBroken(String),
    #[error("Molien identity violated for {0}")]
    MolienViolated(String),
    #[error("relation failure in {rep}: {relation}")]
    RelationFailure { rep: String, relation: String },
    #[error("zero Schur sum for {0}")]
    ZeroSchurSum(String),
    #[error("node {0} lies in the Levi subset")]
    AlphaInLevi(usize),
    #[error("closure exceeds {0} vectors")]
    ClosureTooLarge(usize),
    #[error("non-integer Cartan entry {0}")]
    NonIntegerCartan(String),
    #[error("invalid relative configuration: {0}")]
    InvalidConfiguration(String),
    #[error("presentation check failed: {0}")]
    PresentationFailure(String),
    #[error("label mismatch: {0}")]
    LabelMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
