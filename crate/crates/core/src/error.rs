use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("not a permutation of 1..={n}: {images:?}")]
    NotPermutation { n: usize, images: Vec<usize> },

    #[error("not a partition (must be weakly decreasing and fit in {n} parts): {parts:?}")]
    NotPartition { n: usize, parts: Vec<i64> },

    #[error("unsupported pattern code {0}; expected 312 or 231")]
    UnsupportedPattern(u32),

    #[error("simple reflection index {index} out of range for n = {n}")]
    InvalidIndex { index: usize, n: usize },

    #[error("polynomial is not symmetric under s_{0}")]
    NotSymmetric(usize),

    #[error("division by (x_{i} - x_{j}) left a nonzero remainder", j = .0 + 1, i = .0)]
    InexactDivision(usize),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Gelfand-Tsetlin pattern: {0}")]
    InvalidGtPattern(String),

    #[error("invalid hive array: {0}")]
    InvalidHive(String),

    #[error("permutation {0} is not 312-avoiding")]
    Not312Avoiding(String),

    #[error("permutation {w} does not lie in the Young subgroup for blocks {blocks:?}")]
    NotInYoungSubgroup { w: String, blocks: Vec<usize> },

    #[error("blocks {blocks:?} do not sum to n = {n}")]
    BadBlocks { blocks: Vec<usize>, n: usize },

    #[error("engine {engine} refuses n = {n} (limit {limit})")]
    EngineLimit { engine: &'static str, n: usize, limit: usize },

    #[error("engines disagree: {0}")]
    EngineDisagreement(Box<crate::refined::Reproducer>),

    #[error("symmetry map produced a hive outside the target face: {0}")]
    SymmetryFault(String),

    #[error("coefficient {0} is negative or does not fit in u64")]
    CoefficientRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
