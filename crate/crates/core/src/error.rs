use thiserror::Error;

/// Errors raised by the exact algebra layer and the model verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series parameter mismatch: `{0}` vs `{1}`")]
    ParameterMismatch(String, String),
    #[error("series is not invertible within its cap")]
    NotInvertible,
    #[error("variable {family}{index} exceeds cutoff {cutoff}")]
    Cutoff { family: char, index: usize, cutoff: usize },
    #[error("cutoff mismatch between operands: {0:?} vs {1:?}")]
    CutoffMismatch((usize, usize), (usize, usize)),
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("negative multiplicity {count} at index {index}")]
    NegativeMultiplicity { index: i64, count: i64 },
    #[error("singular spectral parameters: {0}")]
    Singular(String),
    #[error("site {site} out of range for chain {chain} with {len} sites")]
    SiteOutOfRange { chain: u8, site: usize, len: usize },
    #[error("state shape does not match the model")]
    ShapeMismatch,
    #[error("mode window insufficient: {0}")]
    WindowInsufficient(String),
    #[error("enumeration bound exceeded: {requested} > {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
