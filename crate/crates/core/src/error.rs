//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by solvers, quadratures and samplers.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter violated its domain (non-positive mass, etc.).
    #[error("invalid parameter {name}: {value} ({reason})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A grid was too small or too coarse for the requested operation.
    #[error("grid too coarse: {0}")]
    GridTooCoarse(&'static str),

    /// Two samples that must share a grid do not.
    #[error("grid mismatch: {0}")]
    GridMismatch(&'static str),

    /// An evaluation point does not lie on the sample grid.
    #[error("point {x} is not on the grid")]
    PointOffGrid { x: f64 },

    /// csch(xi * L) underflowed; the normalization constant is not
    /// representable.
    #[error("csch({0}) underflows; normalization constant not representable")]
    CschUnderflow(f64),

    /// The eigenvalue iteration failed to bracket a root.
    #[error("eigensolver failed to converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    /// Accumulated finite-difference error exceeded the requested tolerance.
    #[error("accumulated derivative error {deviation:.3e} above tolerance {tolerance:.3e}")]
    AccumulatedError { deviation: f64, tolerance: f64 },

    /// Input data could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
