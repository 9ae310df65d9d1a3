use thiserror::Error;

/// Errors raised by the computations and verifiers in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidArgument(String),

    #[error("q = {q} is not a prime power ({q} = {factorization})")]
    NotPrimePower { q: u64, factorization: String },

    #[error("explicit field enumeration supports prime q only, got q = {0}")]
    UnsupportedField(u64),

    #[error("resource guard: {what} = {value} exceeds the limit {limit}")]
    ResourceGuard {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("inexact division: remainder {remainder} is nonzero")]
    InexactDivision { remainder: String },

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot compose: inner series has nonzero constant term {0}")]
    NonzeroConstantTerm(String),

    #[error("odd double count {sum} for n = {n}: every boundary curve must be counted 2k times")]
    OddDoubleCount { n: usize, sum: String },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_n_at_least(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidArgument(format!("n must be >= {min}")))
    } else {
        Ok(())
    }
}
