use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("brute-force descent enumeration is capped at d = {bound}, requested d = {d}")]
    BruteForceBound { d: usize, bound: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeds limit: {requested} > {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("sieve is built up to {limit}, queried {x}")]
    SieveRange { x: u64, limit: u64 },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("root finder did not converge in {iterations} iterations at {precision} bits (try raising the precision)")]
    NonConvergence { iterations: usize, precision: usize },

    #[error("complex for n = {n} has dimension {dim}, at least 1 is required")]
    DimensionTooSmall { n: u64, dim: isize },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
