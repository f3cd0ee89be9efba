use thiserror::Error;

/// Errors produced by the cover, quotient and invariant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} variables vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("size guard exceeded: {what} is {actual}, limit is {limit}; {hint}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
        hint: &'static str,
    },

    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),

    #[error("order is not a permutation of the minimal generators: {0}")]
    NotPermutation(String),

    #[error("the zero ideal has no vertex cover")]
    ZeroIdeal,

    #[error("the unit ideal has no vertex cover")]
    UnitIdeal,

    #[error("certificate does not have linear quotients")]
    NonLinear,

    #[error("ideal has no ordering with linear quotients")]
    NoLinearOrder,

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
