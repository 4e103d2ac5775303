//! Exact and high-precision evaluation of hypergeometric summation
//! identities.
//!
//! The crate has three layers:
//!
//! * an exact layer — arithmetic in Q[sqrt(2), sqrt(pi)], half-integer
//!   bookkeeping, exact gamma quotients, and the closed forms built on them
//! * a numeric layer — arbitrary-precision floats, series evaluation with
//!   convergence classification, sequence acceleration, and a numeric gamma
//! * an identity layer — parametric identity families, a golden catalog
//!   with a verification harness, and integer-relation constant recognition
//!
//! Entry points: [`closed`] for single closed-form evaluations, [`family`]
//! to generate identities, [`catalog`] to verify the golden set, [`series`]
//! for direct series sums, and [`recognize`] to recover exact constants
//! from decimal strings.

pub mod accel;
pub mod bigfloat;
pub mod catalog;
pub mod closed;
pub mod error;
pub mod exact;
pub mod family;
pub mod gamma_exact;
pub mod gamma_num;
pub mod half;
pub mod recognize;
pub mod series;

pub use error::{ClosedFormError, ExactError, RecognitionError, SeriesError};
pub use exact::{ExactValue, Monomial};
pub use family::{Family, Identity};
pub use half::HalfInteger;
