//! Error types shared across the crate.
//!
//! Each layer has its own enum so callers can match precisely:
//!
//! * [`ExactError`]    — exact-ring arithmetic and exact gamma evaluation
//! * [`SeriesError`]   — series construction, summation and acceleration
//! * [`ClosedFormError`] — closed-form evaluation (domain / pole / ring membership)
//! * [`RecognitionError`] — integer-relation detection

use thiserror::Error;

/// Errors from exact arithmetic in Q[sqrt(2), sqrt(pi)].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Gamma evaluated at a non-positive integer.
    #[error("gamma pole at non-positive integer {0}")]
    Pole(String),
    /// Division is only defined by a single nonzero monomial.
    #[error("division is only defined by a nonzero monomial, got {0}")]
    NonInvertible(String),
    /// A rational was required to be a half-integer (denominator 1 or 2).
    #[error("expected a half-integer, got {0}")]
    NotHalfInteger(String),
}

/// Errors from numeric series evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Parameter lists violate the pFq well-formedness rules.
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    /// The series is outside the convergence domain.
    #[error("series diverges: {0}")]
    Divergent(String),
    /// `max_terms` is insufficient for the requested precision.
    #[error("term budget exhausted: {0}")]
    BudgetExceeded(String),
    /// The extrapolation table broke down (division by a vanishing difference).
    #[error("numerical breakdown in acceleration: {0}")]
    Breakdown(String),
    /// Acceleration needs a minimum number of partial sums.
    #[error("too few partial sums for acceleration: got {got}, need at least {need}")]
    TooFewPartialSums { got: usize, need: usize },
}

/// Errors from closed-form evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    /// A precondition on the parameters is violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// A gamma factor sits at a pole.
    #[error("{0}")]
    Pole(#[from] ExactError),
    /// The value exists but does not lie in Q[sqrt(2), sqrt(pi)].
    #[error("value is not representable in Q[sqrt(2), sqrt(pi)]: {0}")]
    NotRepresentable(String),
}

/// Errors from integer-relation detection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    /// Inputs carry fewer bits than the minimum the algorithm needs.
    #[error("precision too low for relation detection: {got} bits, need at least {need}")]
    PrecisionTooLow { got: usize, need: usize },
    /// Fewer than two input values.
    #[error("need at least two values, got {0}")]
    TooFewValues(usize),
}
