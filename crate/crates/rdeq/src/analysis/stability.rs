//! Equilibrium computation, characteristic-root enumeration, and stability
//! classification.

use nalgebra::DMatrix;
use num::complex::Complex64;
use num::{One, Signed, Zero};

use super::to_f64;
use crate::error::Error;
use crate::index::{div4, rem4};
use crate::rational::Rational;
use crate::system::SystemSpec;

/// Exact rational k-th root of `c`, when one exists.
///
/// For even `k` the principal (non-negative) root is returned; negative `c`
/// with even `k` has none.
pub fn kth_root_exact(c: &Rational, k: usize) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if c.is_negative() && k % 2 == 0 {
        return None;
    }
    let numer = c.numer().nth_root(k as u32);
    let denom = c.denom().nth_root(k as u32);
    let candidate = Rational::new(numer, denom);
    (&num::pow(candidate.clone(), k) == c).then_some(candidate)
}

/// The value of an equilibrium point.
#[derive(Debug, Clone, PartialEq)]
pub enum EquilibriumValue {
    /// Exactly representable.
    Rational(Rational),
    /// `±|radicand|^(1/degree)`, irrational over the rationals.
    Root {
        radicand: Rational,
        degree: usize,
        negative: bool,
        approx: f64,
    },
}

impl EquilibriumValue {
    pub fn approx(&self) -> f64 {
        match self {
            EquilibriumValue::Rational(q) => to_f64(q),
            EquilibriumValue::Root { approx, .. } => *approx,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    Zero,
    Nonzero,
}

/// A constant solution of the recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    pub value: EquilibriumValue,
    pub kind: EquilibriumKind,
}

/// All equilibria of the constant-coefficient recurrence: zero plus the real
/// k-th roots of `(1-A)/B`.
///
/// For `k` odd there is exactly one nonzero candidate; for `k` even two when
/// `(1-A)/B > 0` and none when it is negative. When `A = 1` the nonzero root
/// coincides with zero and only the zero equilibrium is reported.
pub fn equilibria(a: &Rational, b: &Rational, k: usize) -> Result<Vec<Equilibrium>, Error> {
    if b.is_zero() {
        return Err(Error::DegenerateB);
    }
    let mut out = vec![Equilibrium {
        value: EquilibriumValue::Rational(Rational::zero()),
        kind: EquilibriumKind::Zero,
    }];
    let c = (Rational::one() - a) / b;
    if c.is_zero() {
        return Ok(out);
    }

    let root_value = |negative: bool| -> EquilibriumValue {
        match kth_root_exact(&c, k) {
            Some(exact) => {
                EquilibriumValue::Rational(if negative { -exact } else { exact })
            }
            None => {
                let magnitude = to_f64(&c).abs().powf(1.0 / k as f64);
                // Odd k carries the radicand's sign; even k carries the
                // explicit branch choice.
                let sign_negative = if k % 2 == 1 { c.is_negative() } else { negative };
                EquilibriumValue::Root {
                    radicand: c.clone(),
                    degree: k,
                    negative: sign_negative,
                    approx: if sign_negative { -magnitude } else { magnitude },
                }
            }
        }
    };

    if k % 2 == 1 {
        out.push(Equilibrium {
            value: root_value(false),
            kind: EquilibriumKind::Nonzero,
        });
    } else if c.is_positive() {
        out.push(Equilibrium {
            value: root_value(false),
            kind: EquilibriumKind::Nonzero,
        });
        out.push(Equilibrium {
            value: root_value(true),
            kind: EquilibriumKind::Nonzero,
        });
    }
    Ok(out)
}

/// Where a characteristic root came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootProvenance {
    /// Direct enumeration of `λ^{4k} = 1/A` at the zero equilibrium.
    Direct,
    /// `exp(2πi·m/(4k))` from the deflated unit-circle factor.
    UnitCircleExponent(usize),
    /// The r-th fourth root of `A`.
    FourthRootOfA(usize),
}

/// One characteristic root with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoot {
    pub value: Complex64,
    pub provenance: RootProvenance,
}

/// The roots of a (deflated) characteristic polynomial, with their moduli.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    pub roots: Vec<CharRoot>,
    pub moduli: Vec<f64>,
}

impl RootSet {
    fn from_roots(roots: Vec<CharRoot>) -> Self {
        let moduli = roots.iter().map(|r| r.value.norm()).collect();
        Self { roots, moduli }
    }

    pub fn max_modulus(&self) -> f64 {
        self.moduli.iter().cloned().fold(0.0, f64::max)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Characteristic roots at the zero equilibrium: the `4k` solutions of
/// `λ^{4k} = 1/A`, all of modulus `|A|^{-1/(4k)}`.
pub fn char_roots_zero(a: &Rational, k: usize) -> Result<RootSet, Error> {
    if a.is_zero() {
        return Err(Error::Requires("a nonzero constant A"));
    }
    let degree = 4 * k;
    let modulus = to_f64(a).abs().powf(-1.0 / degree as f64);
    let phase = if a.is_positive() { 0.0 } else { 0.5 };
    let roots = (0..degree)
        .map(|m| CharRoot {
            value: Complex64::from_polar(
                modulus,
                std::f64::consts::TAU * (m as f64 + phase) / degree as f64,
            ),
            provenance: RootProvenance::Direct,
        })
        .collect();
    Ok(RootSet::from_roots(roots))
}

/// Characteristic roots at a nonzero equilibrium (`A ≠ 1`):
/// `λ^{4k} - (A-1)(λ^{4k-4} + ⋯ + λ^4) - A = 0`.
///
/// Multiplying by `1 - λ^4` factors the polynomial as
/// `(1 - λ^{4k})(λ^4 - A)`, so the roots are the 4k-th roots of unity plus
/// the fourth roots of `A` — except that the multiplication introduced the
/// spurious solutions `λ^4 = 1`, which fail the original equation
/// (substituting gives `(1-A)k ≠ 0`) and are excluded. That leaves
/// `4(k-1) + 4 = 4k` roots, matching the degree.
pub fn char_roots_nonzero(a: &Rational, k: usize) -> Result<RootSet, Error> {
    if a.is_one() {
        return Err(Error::Requires("A ≠ 1"));
    }
    let degree = 4 * k;
    let mut roots: Vec<CharRoot> = (1..degree)
        .filter(|m| m % k != 0)
        .map(|m| CharRoot {
            value: Complex64::from_polar(1.0, std::f64::consts::TAU * m as f64 / degree as f64),
            provenance: RootProvenance::UnitCircleExponent(m),
        })
        .collect();
    let modulus = to_f64(a).abs().powf(0.25);
    let arg = if a.is_negative() {
        std::f64::consts::PI
    } else {
        0.0
    };
    for r in 0..4 {
        roots.push(CharRoot {
            value: Complex64::from_polar(
                modulus,
                (arg + std::f64::consts::TAU * r as f64) / 4.0,
            ),
            provenance: RootProvenance::FourthRootOfA(r),
        });
    }
    Ok(RootSet::from_roots(roots))
}

/// Residual `|λ^{4k} - (A-1)(λ^{4k-4} + ⋯ + λ^4) - A|` of the
/// nonzero-equilibrium characteristic polynomial at `λ`.
pub fn char_poly_residual(a: &Rational, k: usize, lambda: Complex64) -> f64 {
    let a_f = to_f64(a);
    let mut value = lambda.powu(4 * k as u32) - a_f;
    for r in 1..k {
        value -= (a_f - 1.0) * lambda.powu(4 * r as u32);
    }
    value.norm()
}

/// Numeric cross-check for [`char_roots_nonzero`]: eigenvalues of the
/// companion matrix of the characteristic polynomial.
///
/// The analytic enumeration stays authoritative (unit-circle membership
/// cannot be established numerically); this exists to catch bookkeeping
/// mistakes in the factored form.
pub fn companion_roots(a: &Rational, k: usize) -> Vec<Complex64> {
    let degree = 4 * k;
    let a_f = to_f64(a);
    let mut companion = DMatrix::<f64>::zeros(degree, degree);
    for i in 1..degree {
        companion[(i, i - 1)] = 1.0;
    }
    // Monic p(λ) = λ^{4k} - (A-1)λ^{4k-4} - ⋯ - (A-1)λ^4 - A: the last
    // column holds the negated low coefficients.
    companion[(0, degree - 1)] = a_f;
    for r in 1..k {
        companion[(4 * r, degree - 1)] = a_f - 1.0;
    }
    companion.complex_eigenvalues().iter().cloned().collect()
}

/// Stability label of an equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    LocallyAsymptoticallyStable,
    GloballyAsymptoticallyStable,
    Unstable,
    /// Some characteristic root has modulus exactly one.
    NonHyperbolic,
    /// A boundary configuration the theory does not settle (`|A| = 1` with
    /// `A ≠ 1`, or `A = 0` where the linearization degenerates); reported
    /// with root data and no stability label.
    Unclassified,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::LocallyAsymptoticallyStable => "locally asymptotically stable",
            Classification::GloballyAsymptoticallyStable => "globally asymptotically stable",
            Classification::Unstable => "unstable",
            Classification::NonHyperbolic => "non-hyperbolic",
            Classification::Unclassified => "unclassified",
        })
    }
}

/// One equilibrium with its root set and label.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub equilibrium: Equilibrium,
    pub roots: RootSet,
    pub classification: Classification,
}

/// Full stability picture of a constant-coefficient system.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub equilibria: Vec<EquilibriumReport>,
    /// Root data of the nonzero-equilibrium characteristic polynomial,
    /// present whenever `A ≠ 1` — even when no real nonzero equilibrium
    /// exists, the root analysis is still well defined and reported.
    pub nonzero_char_roots: Option<RootSet>,
}

/// Classify every equilibrium of a constant-coefficient system.
///
/// Zero equilibrium: `|A| > 1` is locally asymptotically stable, `|A| < 1`
/// unstable; `A = 1` is non-hyperbolic, upgraded to globally asymptotically
/// stable when `B > 0` and every initial value is non-negative. The
/// boundary `|A| = 1, A ≠ 1` and the degenerate `A = 0` stay unclassified.
/// Nonzero equilibria are non-hyperbolic for `k > 1`; for `k = 1` the
/// moduli of the fourth roots of `A` decide.
pub fn classify(spec: &SystemSpec) -> Result<StabilityReport, Error> {
    let a = spec
        .a()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence A"))?
        .clone();
    let b = spec
        .b()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence B"))?
        .clone();
    let k = spec.k();
    let one = Rational::one();

    let nonzero_char_roots = if a != one {
        Some(char_roots_nonzero(&a, k)?)
    } else {
        None
    };

    let mut reports = Vec::new();
    for eq in equilibria(&a, &b, k)? {
        let (roots, classification) = match eq.kind {
            EquilibriumKind::Zero => {
                let classification = if a == one {
                    let hypotheses =
                        b.is_positive() && spec.initial().iter().all(|v| !v.is_negative());
                    if hypotheses {
                        Classification::GloballyAsymptoticallyStable
                    } else {
                        Classification::NonHyperbolic
                    }
                } else if a.is_zero() {
                    Classification::Unclassified
                } else if a.abs() > one {
                    Classification::LocallyAsymptoticallyStable
                } else if a.abs() < one {
                    Classification::Unstable
                } else {
                    Classification::Unclassified
                };
                let roots = if a.is_zero() {
                    RootSet::default()
                } else {
                    char_roots_zero(&a, k)?
                };
                (roots, classification)
            }
            EquilibriumKind::Nonzero => {
                let roots = nonzero_char_roots
                    .clone()
                    .expect("nonzero equilibrium implies A != 1");
                let classification = if k > 1 {
                    Classification::NonHyperbolic
                } else if a.abs() < one {
                    Classification::LocallyAsymptoticallyStable
                } else if a.abs() > one {
                    Classification::Unstable
                } else {
                    Classification::NonHyperbolic
                };
                (roots, classification)
            }
        };
        reports.push(EquilibriumReport {
            equilibrium: eq,
            roots,
            classification,
        });
    }
    Ok(StabilityReport {
        equilibria: reports,
        nonzero_char_roots,
    })
}

/// The contraction factors `Θ(s) = 1 - BP/(1 + BP(ks + div4(i) + 1))` along
/// offset `i`, for `s = 0 … n-1`.
///
/// Requires `A = 1`, `B > 0`, and strictly positive initial data; each
/// factor then lies in `(0, 1)` and their running product equals
/// `u_{4kn+i}/u_i`, driving every residue class to zero.
pub fn theta_factors(spec: &SystemSpec, i: usize, n: usize) -> Result<Vec<Rational>, Error> {
    if i >= spec.order() {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: spec.order() as i64 - 1,
        });
    }
    let a = spec
        .a()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence A"))?;
    if !a.is_one() {
        return Err(Error::Requires("A = 1"));
    }
    let b = spec
        .b()
        .constant_value()
        .ok_or(Error::Requires("a constant sequence B"))?;
    if !b.is_positive() {
        return Err(Error::Requires("B > 0"));
    }
    if !spec.initial().iter().all(|v| v.is_positive()) {
        return Err(Error::Requires("positive initial data"));
    }

    let k = spec.k();
    let j = rem4(i);
    let q0 = div4(i);
    let mut bp = b.clone();
    for t in 0..k {
        bp *= &spec.initial()[j + 4 * t];
    }
    let one = Rational::one();
    Ok((0..n)
        .map(|s| {
            let count = Rational::from_integer((k * s + q0 + 1).into());
            &one - &bp / (&one + &bp * count)
        })
        .collect())
}
