use thiserror::Error;

/// Errors produced while building or evaluating layouts.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },
    #[error("{axis} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        axis: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("duplicate entry ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("cluster {cluster} has an empty {axis} set")]
    EmptyCluster { cluster: usize, axis: &'static str },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("layout is not block-contiguous on the {0} axis")]
    NotBlockContiguous(&'static str),
    #[error("weight matrix is not square and symmetric with zero diagonal")]
    InvalidWeights,
    #[error("invalid palette: {0}")]
    InvalidPalette(String),
    #[error("expected {expected} seeds, got {got}")]
    SeedCount { expected: usize, got: usize },
    #[error("no algorithms requested")]
    NoAlgorithms,
    #[error("render scale must be at least 1")]
    ZeroScale,
    #[error("image encoding failed: {0}")]
    Encode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
