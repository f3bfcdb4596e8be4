use thiserror::Error;

/// Every failure the kernel can report. Variants name the offending datum so
/// that case reports can point at it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval [{lo}, {hi}] has lo > hi")]
    InvalidInterval { lo: String, hi: String },
    #[error("pieces overlap: [{first}] and [{second}]")]
    OverlappingPieces { first: String, second: String },
    #[error("inner bounds cross inside [{lo}, {hi}]")]
    InvertedBounds { lo: String, hi: String },
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("inner bound depends on the inner variable")]
    BoundUsesInnerVariable,
    #[error("samples are not a polynomial of degree {degree}")]
    InconsistentSamples { degree: usize },
    #[error("need at least {needed} distinct samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("index {index} out of range (model {model} has {len} rays)")]
    IndexOutOfRange {
        model: String,
        index: usize,
        len: usize,
    },
    #[error("model {model}: no equivalent representative for F{ray} away from {avoid:?}")]
    NoEquivalentRepresentative {
        model: String,
        ray: usize,
        avoid: Vec<usize>,
    },
    #[error("model {model}: {reason}")]
    InvalidModel { model: String, reason: String },
    #[error("effective generators do not form a basis of the degree lattice")]
    SingularBasis,
    #[error("polytope has zero volume")]
    DegeneratePolytope,
    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("support Gram matrix is singular for {0:?}")]
    NoConvergence(Vec<String>),
    #[error("support {0:?} is not negative definite")]
    NonNegativeDefiniteSupport(Vec<String>),
    #[error("family is unbounded: no coordinate decreases")]
    Unbounded,
    #[error("chamber {chamber}: P is not nef ({detail})")]
    NefViolation { chamber: String, detail: String },
    #[error("chamber {chamber}: P + N differs from L ({detail})")]
    DecompositionMismatch { chamber: String, detail: String },
    #[error("chamber {chamber}: negative part has a negative coefficient ({detail})")]
    NegativePart { chamber: String, detail: String },
    #[error("volume jumps at u = {at}: {left} vs {right}")]
    DiscontinuousVolume {
        at: String,
        left: String,
        right: String,
    },
    #[error("chamber cover mismatch: {0}")]
    ChamberCover(String),

    #[error("no multiplicity data for point {0:?}")]
    MissingMultiplicity(String),
    #[error("S value is zero")]
    ZeroS,
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("unsorted input: a1 < a2")]
    UnsortedInput,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degree {k} exceeds the enumeration bound {bound}")]
    BoundExceeded { k: usize, bound: usize },
    #[error("monomial support is empty")]
    EmptySupport,
    #[error("bad monomial index {0:?}")]
    BadMonomial(String),
    #[error("one-parameter subgroup ({r0}, {r1}) needs r1 >= r0 >= 0 and r1 > 0")]
    InvalidSubgroup { r0: i64, r1: i64 },
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
