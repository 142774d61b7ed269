//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by constructors, solvers, and certification routines.
///
/// Payload values are reported as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument {value} outside utility domain ({low}, {high})")]
    OutsideDomain { value: f64, low: f64, high: f64 },

    #[error("{value} is outside the range of u' ({context})")]
    OutOfRange { value: f64, context: &'static str },

    #[error("no sign change while bracketing {context} (searched [{lo}, {hi}])")]
    BracketFailure {
        context: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("root-finder did not converge within {max_iter} iterations ({context})")]
    NoConvergence {
        context: &'static str,
        max_iter: usize,
    },

    #[error("wealth {wealth} below policy grid (lo = {grid_lo})")]
    BelowGrid { wealth: f64, grid_lo: f64 },

    #[error(
        "next-period wealth in state {state} falls below the interpolation grid \
         (lo = {grid_lo}) at wealth {wealth}; extend the grid downward"
    )]
    GridTooNarrow {
        state: usize,
        wealth: f64,
        grid_lo: f64,
    },

    #[error("policy consumption values are not strictly increasing at index {index}")]
    NonMonotonicPolicy { index: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid shock distribution: {0}")]
    InvalidShocks(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("certification failed: {0}")]
    CertificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
