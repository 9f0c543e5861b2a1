//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by exact arithmetic, combinatorics and mode actions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("scalar division by zero")]
    ScalarDivisionByZero,

    #[error("parameter outside C \\ Q_{{<=0}}: t = {0}")]
    ParameterOutsideDomain(String),

    #[error("pole at specialization point t = {0}")]
    PoleAtSpecialization(String),

    #[error("dominance undefined across weights: |lambda| = {0}, |mu| = {1}")]
    DominanceAcrossWeights(u64, u64),

    #[error("cell not in diagram: ({0}, {1})")]
    CellNotInDiagram(usize, usize),

    #[error("length exceeds rectangle height: l = {0}, n = {1}")]
    LengthExceedsRectangleHeight(usize, usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("operation requires N = 3, got N = {0}")]
    RequiresRankTwo(usize),

    #[error("Miura generator index out of range: k = {0}, N = {1}")]
    MiuraIndexOutOfRange(usize, usize),

    #[error("spec out of validated range: {0}")]
    SpecOutOfRange(String),

    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: u64, found: u64 },

    #[error("zero input")]
    ZeroInput,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache validation failed: {0}")]
    CacheInvalid(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
