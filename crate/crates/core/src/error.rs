use thiserror::Error;

/// Errors reported by the library. Caps and malformed inputs are typed so the
/// CLI can map them onto exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("degree {0} exceeds the cap of 65536 points")]
    DegreeTooLarge(usize),
    #[error("group of order {order} exceeds the element cap {cap}")]
    CapExceeded { order: u128, cap: u64 },
    #[error("index {index} exceeds the coset cap {cap}")]
    IndexTooLarge { index: u128, cap: u64 },
    #[error("{0} classes exceeds the supported bound {1}")]
    TooManyClasses(usize, usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("catalog entry {name} failed validation:\n{diff}")]
    Validation { name: String, diff: String },
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
