//! Error type shared by all evaluators.

use thiserror::Error;

/// Errors raised by evaluators, identity checks and sweeps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain: {0}")]
    Domain(String),

    /// Input outside the supported desk-scale range (the mathematics is fine,
    /// the evaluation method is not).
    #[error("range: {0}")]
    Range(String),

    /// Series truncation budget exhausted before the stopping rule fired.
    #[error("series did not converge within {max_terms} terms (last term ratio {last_ratio:e})")]
    NonConvergence { max_terms: usize, last_ratio: f64 },

    /// A partial result left the representable range.
    #[error("overflow in {0}")]
    Overflow(&'static str),

    /// Malformed configuration (grids, tolerances, case names).
    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
