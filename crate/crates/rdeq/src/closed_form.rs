//! Product-form solutions of the recurrence, certified against the
//! iteration oracle.
//!
//! Writing a target index as `4kn + i` with block `n ≥ 0` and offset
//! `0 ≤ i ≤ 4k-1`, the solution telescopes into a product of `n` bracket
//! ratios taken along the residue class `rem4(i)`:
//!
//! ```text
//! u_{4kn+i} = u_i · ∏_{s=0}^{n-1}  N_s / D_s
//! N_s = (∏_{k1<m} A_{4k1+j}) + P · Σ_{l<m} (B_{4l+j} ∏_{l<k2<m} A_{4k2+j}),   m = ks + div4(i)
//! D_s = the same bracket at m+1,            with  j = rem4(i),  P = u_j u_{j+4} ⋯ u_{j+4k-4}
//! ```
//!
//! [`eval_u_general`] evaluates this for arbitrary periodic coefficients;
//! [`eval_u_constant`] specializes the inner products to geometric powers
//! when `A` and `B` are constant; [`eval_eta`] is the same solution addressed
//! through the delayed (η) indexing; [`eval_eta_a_one`] and
//! [`eval_eta_a_minus_one`] are the degenerate constants `a = 1` (counts
//! instead of geometric sums) and `a = -1` (a pure power of one bracket).
//!
//! Every evaluator must agree bit-exactly with [`SystemSpec::iterate`]
//! wherever the orbit is defined; [`compare`] checks exactly that.

use std::fmt;

use num::{One, Zero};

use crate::error::Error;
use crate::index::{div4, eta_to_u_index, rem4};
use crate::rational::{pow_signed, Rational};
use crate::system::{Form, OrbitStatus, SystemSpec};

fn check_offset(spec: &SystemSpec, offset: usize) -> Result<(), Error> {
    if offset >= spec.order() {
        return Err(Error::IndexOutOfRange {
            index: offset as i64,
            min: 0,
            max: spec.order() as i64 - 1,
        });
    }
    Ok(())
}

/// `∏_{s=0}^{n-1} bracket(ks + q0) / bracket(ks + q0 + 1)` along residue
/// class `j`, where `bracket(m)` is the coefficient bracket above with
/// initial-block product `p`.
///
/// Single accumulation pass over the class block index `m`, so evaluation at
/// block `n` costs O(kn) rather than the O(kn²) of the literal nested loops.
/// A vanishing denominator bracket reports the offending outer step `s`.
fn bracket_product(
    spec: &SystemSpec,
    j: usize,
    q0: usize,
    p: &Rational,
    n: usize,
) -> Result<Rational, Error> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let k = spec.k();
    let m_max = k * (n - 1) + q0 + 1;
    let mut a_prod = Rational::one();
    let mut b_sum = Rational::zero();
    let mut acc = Rational::one();
    for m in 0..=m_max {
        let bracket = &a_prod + p * &b_sum;
        if m >= q0 && (m - q0) % k == 0 && (m - q0) / k < n {
            acc *= &bracket;
        }
        if m > q0 && (m - q0 - 1) % k == 0 && (m - q0 - 1) / k < n {
            if bracket.is_zero() {
                return Err(Error::ZeroBracket {
                    s: (m - q0 - 1) / k,
                });
            }
            acc /= &bracket;
        }
        if m < m_max {
            let a_m = spec.a().term(4 * m + j);
            b_sum = b_sum * a_m + spec.b().term(4 * m + j);
            a_prod *= a_m;
        }
    }
    Ok(acc)
}

/// Closed form for arbitrary (periodic) coefficient sequences at u-index
/// `4kn + i`.
pub fn eval_u_general(spec: &SystemSpec, n: usize, i: usize) -> Result<Rational, Error> {
    check_offset(spec, i)?;
    let j = rem4(i);
    let mut p = Rational::one();
    for t in 0..spec.k() {
        p *= &spec.initial()[j + 4 * t];
    }
    Ok(&spec.initial()[i] * bracket_product(spec, j, div4(i), &p, n)?)
}

/// Closed form for constant `A`, `B` at u-index `4kn + i`, with the inner
/// sums evaluated as geometric sums.
///
/// The geometric branch `Σ A^l = (1 - A^m)/(1 - A)` versus the count branch
/// `Σ 1^l = m` is selected by exact comparison with one, never by tolerance.
pub fn eval_u_constant(spec: &SystemSpec, n: usize, i: usize) -> Result<Rational, Error> {
    check_offset(spec, i)?;
    let a = spec
        .a()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence A"))?;
    let b = spec
        .b()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence B"))?;
    let k = spec.k();
    let j = rem4(i);
    let q0 = div4(i);

    let mut bp = b.clone();
    for t in 0..k {
        bp *= &spec.initial()[j + 4 * t];
    }

    let one = Rational::one();
    let a_is_one = *a == one;
    let one_minus_a = &one - a;
    // Σ_{l=0}^{m-1} a^l, given a^m.
    let gsum = |m: usize, a_pow_m: &Rational| -> Rational {
        if a_is_one {
            Rational::from_integer(m.into())
        } else {
            (&one - a_pow_m) / &one_minus_a
        }
    };

    let a_step = num::pow(a.clone(), k);
    let mut a_pow = num::pow(a.clone(), q0); // a^{ks + q0} across s
    let mut acc = spec.initial()[i].clone();
    for s in 0..n {
        let m = k * s + q0;
        let numerator = &a_pow + &bp * gsum(m, &a_pow);
        let a_pow_next = &a_pow * a;
        let denominator = &a_pow_next + &bp * gsum(m + 1, &a_pow_next);
        if denominator.is_zero() {
            return Err(Error::ZeroBracket { s });
        }
        acc = acc * numerator / denominator;
        a_pow *= &a_step;
    }
    Ok(acc)
}

/// Closed form addressed through the delayed indexing: the value of
/// `η_{4kn - 4k + 1 + i}`, which sits at u-index `4kn + i`.
///
/// The initial block is read as `η_{-4k+1} … η_0` (the [`Form::Eta`]
/// convention for [`SystemSpec::initial`]); coefficients `a_n`, `b_n`
/// coincide with `A_n`, `B_n` at the same `n`.
pub fn eval_eta(spec: &SystemSpec, n: usize, i: usize) -> Result<Rational, Error> {
    check_offset(spec, i)?;
    let k = spec.k();
    let shift = 4 * k as i64 - 1;
    let eta = |m: i64| -> Result<&Rational, Error> {
        Ok(&spec.initial()[eta_to_u_index(k, m)?])
    };
    let j = rem4(i);
    let lead = eta(i as i64 - shift)?.clone();
    let mut p = Rational::one();
    for t in 0..k {
        p *= eta(j as i64 - shift + 4 * t as i64)?;
    }
    Ok(lead * bracket_product(spec, j, div4(i), &p, n)?)
}

/// Degenerate constants `a = 1`: the geometric sums collapse to counts,
///
/// ```text
/// η_{4kn-4k+1+i} = η_{i-4k+1} · ∏_{s=0}^{n-1} (1 + bP(ks+q)) / (1 + bP(ks+q+1))
/// ```
///
/// with `q = div4(i)` and `P` the initial η-product of class `rem4(i)`.
pub fn eval_eta_a_one(spec: &SystemSpec, n: usize, i: usize) -> Result<Rational, Error> {
    check_offset(spec, i)?;
    let a = spec
        .a()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence A"))?;
    if !a.is_one() {
        return Err(Error::Requires("a = 1"));
    }
    let b = spec
        .b()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence B"))?;
    let k = spec.k();
    let shift = 4 * k as i64 - 1;
    let j = rem4(i);
    let q0 = div4(i);

    let mut bp = b.clone();
    for t in 0..k {
        bp *= &spec.initial()[eta_to_u_index(k, j as i64 - shift + 4 * t as i64)?];
    }
    let lead = spec.initial()[eta_to_u_index(k, i as i64 - shift)?].clone();

    let one = Rational::one();
    let count = |m: usize| Rational::from_integer(m.into());
    let mut acc = lead;
    for s in 0..n {
        let m = k * s + q0;
        let numerator = &one + &bp * count(m);
        let denominator = &one + &bp * count(m + 1);
        if denominator.is_zero() {
            return Err(Error::ZeroBracket { s });
        }
        acc = acc * numerator / denominator;
    }
    Ok(acc)
}

/// Degenerate constants `a = -1`: the value of `η_{4kn - j}` collapses to a
/// signed power of the single bracket `-1 + bP`.
///
/// For `k` even the exponent is `±n` (sign flipping with the parity of
/// `div4(j)`); for `k` odd the solution returns to `η_{-j}` at every even
/// `n` and is `η_{-j}·(-1 + bP)^{∓1}` at odd `n`, hence is `8k`-periodic.
/// Errors only when the bracket is zero and a negative exponent is required;
/// such data puts the orbit itself in the forbidden set.
pub fn eval_eta_a_minus_one(spec: &SystemSpec, n: usize, j: usize) -> Result<Rational, Error> {
    check_offset(spec, j)?;
    let a = spec
        .a()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence A"))?;
    if *a != -Rational::one() {
        return Err(Error::Requires("a = -1"));
    }
    let b = spec
        .b()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence B"))?;
    let k = spec.k();

    let eta_index = |m: i64| eta_to_u_index(k, m);
    // P = ∏_{r=0}^{k-1} η_{-rem4(j) - 4r}
    let mut p = Rational::one();
    for r in 0..k {
        p *= &spec.initial()[eta_index(-(rem4(j) as i64) - 4 * r as i64)?];
    }
    let bracket = b * p - Rational::one();
    let lead = spec.initial()[eta_index(-(j as i64))?].clone();

    let exponent: i64 = if k % 2 == 0 {
        if div4(j) % 2 == 0 {
            n as i64
        } else {
            -(n as i64)
        }
    } else if n % 2 == 0 {
        return Ok(lead);
    } else if div4(j) % 2 == 0 {
        -1
    } else {
        1
    };
    match pow_signed(&bracket, exponent) {
        Some(factor) => Ok(lead * factor),
        None => Err(Error::ZeroBracket { s: 0 }),
    }
}

/// Which closed form [`compare`] drives for a given system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvaluatorKind {
    UGeneral,
    UConstant,
    Eta,
    EtaUnitA,
    EtaNegUnitA,
}

impl fmt::Display for EvaluatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvaluatorKind::UGeneral => "general",
            EvaluatorKind::UConstant => "constant",
            EvaluatorKind::Eta => "eta-general",
            EvaluatorKind::EtaUnitA => "a=1 special",
            EvaluatorKind::EtaNegUnitA => "a=-1 special",
        })
    }
}

/// The most specific closed form applicable to `spec`.
pub fn choose_evaluator(spec: &SystemSpec) -> EvaluatorKind {
    match (spec.a().constant_value(), spec.b().constant_value()) {
        (Some(a), Some(_)) if a.is_one() => EvaluatorKind::EtaUnitA,
        (Some(a), Some(_)) if *a == -Rational::one() => EvaluatorKind::EtaNegUnitA,
        (Some(_), Some(_)) => EvaluatorKind::UConstant,
        _ if spec.form() == Form::Eta => EvaluatorKind::Eta,
        _ => EvaluatorKind::UGeneral,
    }
}

/// Evaluate the chosen closed form at a plain u-index.
pub fn eval_at(
    spec: &SystemSpec,
    kind: EvaluatorKind,
    u_index: usize,
) -> Result<Rational, Error> {
    let order = spec.order();
    let (n, i) = (u_index / order, u_index % order);
    match kind {
        EvaluatorKind::UGeneral => eval_u_general(spec, n, i),
        EvaluatorKind::UConstant => eval_u_constant(spec, n, i),
        EvaluatorKind::Eta => eval_eta(spec, n, i),
        EvaluatorKind::EtaUnitA => eval_eta_a_one(spec, n, i),
        EvaluatorKind::EtaNegUnitA => eval_eta_a_minus_one(spec, n, order - 1 - i),
    }
}

/// One disagreement between a closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    /// `None` when the evaluator reported an error at an index where the
    /// oracle is defined.
    pub closed_form: Option<Rational>,
    pub oracle: Rational,
}

/// Outcome of checking a closed form against the oracle over a horizon.
///
/// An empty mismatch list means exact agreement at every index where the
/// oracle is defined; a truncated oracle shows up in `oracle_status` and the
/// comparison simply stops there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub horizon: usize,
    pub evaluator: EvaluatorKind,
    pub mismatches: Vec<Mismatch>,
    pub oracle_status: OrbitStatus,
}

impl ComparisonReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Evaluate the most specific applicable closed form at every index up to
/// `horizon` and compare exactly with the iteration oracle.
pub fn compare(spec: &SystemSpec, horizon: usize) -> ComparisonReport {
    let orbit = spec.iterate(horizon);
    let evaluator = choose_evaluator(spec);
    let mut mismatches = Vec::new();
    for (index, oracle_value) in orbit.terms().iter().enumerate() {
        match eval_at(spec, evaluator, index) {
            Ok(value) if &value == oracle_value => {}
            Ok(value) => mismatches.push(Mismatch {
                index,
                closed_form: Some(value),
                oracle: oracle_value.clone(),
            }),
            Err(_) => mismatches.push(Mismatch {
                index,
                closed_form: None,
                oracle: oracle_value.clone(),
            }),
        }
    }
    ComparisonReport {
        horizon,
        evaluator,
        mismatches,
        oracle_status: orbit.status(),
    }
}
