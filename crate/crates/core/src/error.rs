use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not biclosed: {0}")]
    NotBiclosed(String),
    #[error("mixed sizes: {0} vs {1}")]
    MixedSizes(usize, usize),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("crossing arcs: {0}")]
    Crossing(String),
    #[error("arc set is not closed under taking subarcs: {0}")]
    NotIdeal(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid windows: {0}")]
    InvalidWindows(String),
    #[error("inconsistent encoding: {0}")]
    InconsistentEncoding(String),
    #[error("not a lower wall: {0}")]
    NotAWall(String),
    #[error("not a wrapped arc: {0}")]
    NotWrapped(String),
    #[error("not widely generated: {0}")]
    NotWidelyGenerated(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("not a lattice: elements {0} and {1} have no unique bound")]
    NotALattice(usize, usize),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
