use thiserror::Error;

/// Errors raised by the library. Variants that signal an internal inconsistency
/// (non-exact division, singular systems) indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition size {size} exceeds the supported bound {max}")]
    TooLarge { size: usize, max: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("μ not contained in λ")]
    NotContained,

    #[error("rank {n} is outside the supported range for type {kind} (need n >= {min})")]
    RankGuard { kind: char, n: usize, min: usize },

    #[error("operation requires odd n, got {0}")]
    NeedOddRank(usize),

    #[error("split class family mismatch: expected {expected}, got {got}")]
    WrongFamily { expected: String, got: String },

    #[error("non-exact polynomial division: {0}")]
    NonExactDivision(String),

    #[error("singular linear system")]
    Singular,

    #[error("representation dimension {required} exceeds cap {cap}")]
    CapExceeded { required: usize, cap: usize },

    #[error("expression is not a power series: {0}")]
    NotPowerSeries(String),

    #[error("coefficient has an irrational component")]
    Irrational,

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
