use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair ({0}, {1}) must carry exactly one arc")]
    MissingOrDoubleArc(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("size {n} exceeds the limit of {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("invalid symbol: {0}")]
    InvalidSymbol(SymbolDefect),
    #[error("order {0} must be odd and at least 3")]
    EvenOrTooSmall(usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("{0} is not congruent to 3 mod 4")]
    WrongResidueClass(usize),
    #[error("order {0} is too small")]
    TooSmall(usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("k = {0} is not supported (expected 1, 2 or 3)")]
    UnsupportedK(usize),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(&'static str),
    #[error("tournament is not regular")]
    NotRegular,
}

/// What makes a candidate symbol invalid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolDefect {
    #[error("order {0} must be odd and at least 3")]
    BadOrder(usize),
    #[error("expected {expected} members, found {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("member {0} outside 1..n-1")]
    OutOfRange(usize),
    #[error("member {0} repeated")]
    Duplicate(usize),
    #[error("members {0} and {1} sum to the order")]
    ComplementPair(usize, usize),
}
