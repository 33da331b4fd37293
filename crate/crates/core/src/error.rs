//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by exact spectral computations.
///
/// Every fallible operation in the crate reports through this enum; exact
/// comparisons never guess, so when a certified answer cannot be produced
/// within configured limits the failure is explicit.
#[derive(Debug, Error)]
pub enum Error {
    /// An operation that requires a nonnegative argument received a
    /// negative one (for example an integer square root).
    #[error("negative input: {context}")]
    NegativeInput { context: &'static str },

    /// A sphere dimension outside the supported range (`n >= 1`, plus any
    /// operation-specific lower bound).
    #[error("unsupported dimension {dim}: {context}")]
    UnsupportedDimension { dim: u32, context: &'static str },

    /// A regime scan limit too small to certify a stable threshold.
    #[error("scan limit {scan_limit} is below the proven bound {bound} for dimension {dim}")]
    ScanLimitTooSmall {
        dim: u32,
        scan_limit: u64,
        bound: u64,
    },

    /// A bisection tolerance or other width parameter that must be positive.
    #[error("tolerance must be positive, got {value}")]
    NonPositiveTolerance { value: String },

    /// A box side length that must be positive.
    #[error("box side must be positive, got {value}")]
    NonPositiveSide { value: String },

    /// A spectral bound `q_max` that must be positive.
    #[error("q_max must be positive, got {value}")]
    NonPositiveQMax { value: String },

    /// A box domain with no sides.
    #[error("box domain needs at least one side")]
    EmptyBox,

    /// Lattice enumeration would exceed the configured node budget.
    #[error(
        "enumeration budget exceeded: needs about {needed} lattice points, budget is {budget}"
    )]
    BudgetExceeded { needed: String, budget: u64 },

    /// A certified comparison still could not be decided at the maximum
    /// working precision.
    #[error("comparison undecided at {bits} bits of pi precision")]
    PrecisionExceeded { bits: u32 },

    /// An internal consistency failure, for quantities proved to be exact
    /// that fail their own cross-check.  Must never occur.
    #[error("internal consistency error: {context}")]
    Internal { context: &'static str },
}
