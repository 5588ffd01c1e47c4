//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by metric construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Deformation parameter outside (0, 1].
    #[error("deformation parameter t = {0} outside (0, 1]")]
    ParamOutOfRange(f64),

    /// A scalar argument left its documented closed range.
    #[error("{name} = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// A chain step (or candidate pair) exceeds the maximum step length 2.
    #[error("chain step of length {0} exceeds 2")]
    StepTooLong(f64),

    /// No unit sphere passes through two points farther than 2 apart.
    #[error("no unit-sphere embedding through points {0} apart")]
    NoEmbedding(f64),

    /// A step profile cannot be realized by any chain with the requested
    /// endpoint separation.
    #[error("step profile not realizable: {0}")]
    Unrealizable(String),

    /// A configuration value is invalid.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The dynamic program would exceed its operation budget.
    #[error("grid dynamic program over budget: needs ~{needed} ops, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    /// Non-finite coordinate where a finite one is required.
    #[error("non-finite coordinate {0}")]
    NonFinite(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
