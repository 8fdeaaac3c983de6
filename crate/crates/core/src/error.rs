use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{0}: {1}")]
    NotAPermutation(usize, String),
    #[error("permutation is not a single cycle: {0}")]
    NotCyclic(String),
    #[error("duplicate or unsorted points in cycle")]
    UnsortedPoints,
    #[error("successor map has wrong length or out-of-range index")]
    BadSuccessor,
    #[error("empty input")]
    Empty,
    #[error("Stefan patterns need an odd order >= 3, got {0}")]
    InvalidStefanOrder(usize),
    #[error("over-rotation pairs are undefined for fixed points")]
    FixedPointHasNoPair,
    #[error("2^inf cannot be realized by a finite pattern")]
    TwoInfinityUnsupported,
    #[error("power iteration did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("breakpoints must be strictly increasing and lie in [0, 1)")]
    InvalidBreakpoints,
    #[error("points are not a cycle of the map")]
    NotACycle,
    #[error("rotation interval endpoint is not an exact rational")]
    InexactEndpoint,
    #[error("integer overflow in exact orbit arithmetic")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
