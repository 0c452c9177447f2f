//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building systems, iterating orbits, or
/// evaluating closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The recurrence denominator `A(n) + B(n)·∏ u` vanished at step `n`,
    /// i.e. the initial data lies in the forbidden set.
    #[error("zero denominator at recurrence step n = {n}")]
    ZeroDenominator { n: usize },

    /// A denominator bracket of a closed-form product vanished at outer
    /// step `s` of the evaluation.
    #[error("closed-form denominator bracket vanished at product step s = {s}")]
    ZeroBracket { s: usize },

    /// A factor of the reciprocal product invariant was zero at orbit
    /// index `n`, so the invariant is undefined there.
    #[error("zero orbit term at index n = {n}: reciprocal product undefined")]
    ZeroFactor { n: usize },

    /// The reduced variable itself vanished at index `n`; the telescoped
    /// ratio it appears under is undefined.
    #[error("reduced variable vanished at index n = {n}")]
    ZeroInvariant { n: usize },

    /// An index fell outside its valid range.
    #[error("index {index} outside valid range {min}..={max}")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    /// `B = 0` degenerates the recurrence to a pure geometric scaling; the
    /// nonzero-equilibrium analysis does not apply.
    #[error("B = 0: recurrence degenerates to a geometric scaling")]
    DegenerateB,

    /// Period detection was asked for more evidence than the orbit holds.
    #[error(
        "period detection up to {max_period} needs {required} complete terms, orbit has {available}"
    )]
    InsufficientHorizon {
        available: usize,
        required: usize,
        max_period: usize,
    },

    /// An operation's precondition was not met by the supplied system.
    #[error("operation requires {0}")]
    Requires(&'static str),

    /// A coefficient sequence must hold at least one value.
    #[error("empty coefficient sequence")]
    EmptySequence,

    /// The order parameter must be at least one.
    #[error("order parameter k must be at least 1")]
    ZeroOrder,

    /// Wrong number of initial values for the given order parameter.
    #[error("expected {expected} initial values for k = {k}, got {got}")]
    InitialCount {
        k: usize,
        expected: usize,
        got: usize,
    },

    /// A rational literal did not match the `p/q` (or plain `p`) format.
    #[error("invalid rational literal {input:?}")]
    InvalidRational { input: String },
}
