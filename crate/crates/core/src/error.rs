use thiserror::Error;

/// Errors raised by state validation, registries and parsing.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension {0} is too small (need at least 2)")]
    DimensionTooSmall(usize),

    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("non-finite entry at index {0}")]
    NonFinite(usize),

    #[error("not Hermitian: max |m_jk - conj(m_kj)| = {violation:e}")]
    NotHermitian { violation: f64 },

    #[error("trace is not 1: |tr - 1| = {violation:e}")]
    NotUnitTrace { violation: f64 },

    #[error("not positive semidefinite: smallest eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("state is not normalized: |norm - 1| = {violation:e}")]
    NotNormalized { violation: f64 },

    #[error("invalid probability vector: {0}")]
    InvalidProbability(String),

    #[error("state rank {rank} exceeds ensemble size {ensemble_size}")]
    RankExceedsEnsembleSize { rank: usize, ensemble_size: usize },

    #[error("bound for '{name}' is not positive at d = {dim} (got {value})")]
    InvalidBound { name: String, dim: usize, value: f64 },

    #[error("unknown {kind} '{name}'")]
    UnknownName { kind: &'static str, name: String },

    #[error("optimizer stopped after {iterations} iterations without converging")]
    NotConverged { iterations: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
