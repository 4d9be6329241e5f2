use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown Cartan series '{0}' (valid series: A, B, C, D, E, F, G)")]
    UnknownSeries(String),

    #[error("cannot parse Cartan type '{0}': expected a series letter followed by a rank, e.g. A2, G2, E8")]
    BadTypeString(String),

    #[error("invalid rank {rank} for series {series}: {reason}")]
    InvalidRank {
        series: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("simple reflection index {index} out of range 1..={rank}")]
    ReflectionIndex { index: usize, rank: usize },

    #[error("exterior degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("ideal size {size} out of range 0..={max}")]
    IdealSizeOutOfRange { size: usize, max: usize },

    #[error("characters belong to different root systems ({0} vs {1})")]
    AmbientMismatch(String, String),

    #[error("not a module character: residual multiplicity at {0} would become negative")]
    NotModuleCharacter(String),

    #[error("{what} needs {needed} terms, over the budget of {budget}{hint}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
        hint: &'static str,
    },

    #[error("unknown basis label {0}")]
    UnknownLabel(String),

    #[error("Freudenthal recursion produced a non-integral multiplicity at {0}")]
    NonIntegralMultiplicity(String),

    #[error("strategies disagree for {cartan} at degree {degree}: {detail}")]
    StrategyDisagreement {
        cartan: String,
        degree: usize,
        detail: String,
    },

    #[error("cache file {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
