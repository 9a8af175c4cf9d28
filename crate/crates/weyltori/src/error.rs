//! Error type shared by every module of the library.

use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto its exit-code contract: `Parse`/`Validation`/
/// `KindMismatch`/`SizeMismatch` are usage errors (exit 1),
/// `InternalConsistency` and `NotStabilized` are consistency failures
/// (exit 2), and `BudgetExceeded` is exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data (images list, partition parts, flag syntax).
    #[error("validation error: {0}")]
    Validation(String),

    /// An operation mixed type A and type B/C objects.
    #[error("kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },

    /// A label or partition has the wrong total size for the requested group.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// Expression syntax error, with a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An enumeration would exceed the configured cap.
    #[error("enumeration budget exceeded: need {required} elements, cap is {cap}")]
    BudgetExceeded { required: String, cap: u64 },

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    /// A stabilization witness failed: two consecutive probes disagree.
    #[error(
        "value did not stabilize: n={n} gives {value_at_n}, n={} gives {value_at_next}", n + 1
    )]
    NotStabilized {
        n: usize,
        value_at_n: String,
        value_at_next: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
