//! Equilibria, characteristic roots, stability classification, and
//! periodicity.
//!
//! For constant coefficients the recurrence has the constant solutions
//! `ū(A + Bū^k - 1) = 0`: zero, plus the real k-th roots of `(1-A)/B`.
//! Linearizing at an equilibrium yields a characteristic polynomial in
//! `λ^4` whose root moduli decide local stability; [`stability`] enumerates
//! those roots analytically (with a numeric companion-matrix solve kept as a
//! cross-check) and classifies each equilibrium.
//!
//! [`period`] predicts periods from the closed forms — residue-class
//! products hitting `(1-A)/B` force period `4k`, and the constant `A = -1`
//! has its own `4k`/`8k` dichotomy by the parity of `k` — and detects minimal
//! periods empirically by exact comparison over a computed orbit.

mod period;
mod stability;

pub use period::{
    detect_period, period_report, predict_period, PeriodPrediction, PeriodReport, PeriodRule,
};
pub use stability::{
    char_poly_residual, char_roots_nonzero, char_roots_zero, classify, companion_roots,
    equilibria, kth_root_exact, theta_factors, CharRoot, Classification, Equilibrium,
    EquilibriumKind, EquilibriumReport, EquilibriumValue, RootProvenance, RootSet,
    StabilityReport,
};

pub(crate) use crate::rational::to_f64;
