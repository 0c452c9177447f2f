//! Periodicity: prediction from the closed forms, detection from orbits.

use num::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;
use crate::system::{Orbit, SystemSpec};

/// Why a period was predicted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodRule {
    /// Every residue-class product of the initial data equals `(1-A)/B`,
    /// which freezes the reduced variable at its fixed point: period `4k`.
    ClassProducts,
    /// `A = -1` with `k` odd: each value returns after two blocks, period
    /// `8k`.
    MinusOneOddK,
    /// `A = -1` with `k` even and every bracket `-1 + BP` equal to one, so
    /// the per-block factor is trivial: period `4k` rather than `8k`.
    MinusOneEvenKUnitBracket,
}

impl std::fmt::Display for PeriodRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PeriodRule::ClassProducts => "residue-class products equal (1-A)/B",
            PeriodRule::MinusOneOddK => "A = -1 with odd k",
            PeriodRule::MinusOneEvenKUnitBracket => "A = -1 with even k and unit brackets",
        })
    }
}

/// A theorem-backed period with its justification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodPrediction {
    pub period: usize,
    pub rule: PeriodRule,
}

/// Predict a period for a constant-coefficient system from its initial
/// data, or `None` when no rule applies (including non-constant
/// coefficients and data whose orbit dies in the forbidden set).
pub fn predict_period(spec: &SystemSpec) -> Option<PeriodPrediction> {
    let a = spec.a().constant_value()?;
    let b = spec.b().constant_value()?;
    let k = spec.k();
    let one = Rational::one();

    // Residue-class products P_p = u_p u_{p+4} ⋯ u_{p+4k-4}.
    let products: Vec<Rational> = (0..4)
        .map(|p| {
            let mut product = one.clone();
            for t in 0..k {
                product *= &spec.initial()[p + 4 * t];
            }
            product
        })
        .collect();

    let products_match = !b.is_zero() && *a != one && {
        let target = (&one - a) / b;
        products.iter().all(|p| p == &target)
    };

    if *a == -one.clone() {
        if products_match {
            // The brackets -1 + BP are all exactly one.
            let rule = if k % 2 == 0 {
                PeriodRule::MinusOneEvenKUnitBracket
            } else {
                PeriodRule::ClassProducts
            };
            return Some(PeriodPrediction {
                period: 4 * k,
                rule,
            });
        }
        let brackets_nonzero = products
            .iter()
            .all(|p| !(b * p - &one).is_zero());
        if brackets_nonzero && k % 2 == 1 {
            return Some(PeriodPrediction {
                period: 8 * k,
                rule: PeriodRule::MinusOneOddK,
            });
        }
        return None;
    }

    products_match.then_some(PeriodPrediction {
        period: 4 * k,
        rule: PeriodRule::ClassProducts,
    })
}

/// Smallest `p ≤ max_period` with `terms[n+p] = terms[n]` exactly for every
/// covered `n`, or `None` when no such `p` exists.
///
/// Demands a complete orbit holding at least `3·max_period` terms, so a
/// match is attested by at least two full repetitions.
pub fn detect_period(orbit: &Orbit, max_period: usize) -> Result<Option<usize>, Error> {
    let terms = orbit.terms();
    let required = 3 * max_period;
    if !orbit.is_complete() || terms.len() < required {
        return Err(Error::InsufficientHorizon {
            available: terms.len(),
            required,
            max_period,
        });
    }
    for p in 1..=max_period {
        if (0..terms.len() - p).all(|n| terms[n] == terms[n + p]) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Predicted and detected period over a computed horizon.
///
/// Whenever both are present the detected minimal period divides the
/// predicted one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub predicted: Option<PeriodPrediction>,
    pub detected: Option<usize>,
    pub horizon: usize,
}

/// Run prediction and detection together, extending the horizon to the
/// `3·max_period` terms detection needs.
///
/// A forbidden orbit cannot be periodic; it yields `detected: None` rather
/// than an error.
pub fn period_report(
    spec: &SystemSpec,
    max_period: usize,
    horizon: usize,
) -> Result<PeriodReport, Error> {
    let horizon = horizon.max((3 * max_period).saturating_sub(1));
    let orbit = spec.iterate(horizon);
    let detected = if orbit.is_complete() {
        detect_period(&orbit, max_period)?
    } else {
        None
    };
    Ok(PeriodReport {
        predicted: predict_period(spec),
        detected,
        horizon,
    })
}
