use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed word: letter index {index} outside alphabet of size {n}")]
    MalformedWord { index: i64, n: usize },
    #[error("alphabet size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("enclosed set must be nonempty")]
    EmptySet,
    #[error("position {position} out of range for factorization of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(i64),
    #[error("stretch factor {0} is not the stretch of a twist pair")]
    NotATwistPairStretch(f64),
    #[error("resource limit exceeded: {what} (limit {limit}, reached after {progress})")]
    ResourceLimit {
        what: String,
        limit: u64,
        progress: String,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
