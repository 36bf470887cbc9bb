use alloc::string::String;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("ring is not finitely generated as a Z-module: {0}")]
    NotModuleFinite(String),
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("brute-force oracle cap exceeded: {0}")]
    OracleCapExceeded(String),
    #[error("computation cancelled")]
    Cancelled,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ideals are not pairwise comaximal: {0}")]
    NotComaximal(String),
    #[error("ring is not reduced: {0}")]
    NotReduced(String),
    #[error("ring has additive torsion: {0}")]
    HasTorsion(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn internal<T>(msg: &str) -> Result<T> {
    Err(Error::Internal(String::from(msg)))
}
