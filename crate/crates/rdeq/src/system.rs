//! Problem instances and the brute-force forward-iteration oracle.
//!
//! A [`SystemSpec`] fixes an order parameter `k`, coefficient sequences `A_n`
//! and `B_n`, and `4k` initial values for the order-`4k` recurrence
//!
//! ```text
//! u_{n+4k} = u_n / (A_n + B_n · u_n u_{n+4} ⋯ u_{n+4k-4})
//! ```
//!
//! The denominator product strides by 4: indices `n+1`, `n+2`, `n+3` evolve as
//! three interleaved independent copies of the same scheme, and no coupling
//! between residue classes mod 4 is ever introduced.
//!
//! [`SystemSpec::iterate`] is the oracle the whole crate is certified
//! against: it applies the recurrence step by step in exact arithmetic.
//! Initial data whose orbit hits a zero denominator belongs to the forbidden
//! set; the orbit then truncates and records where.

use num::Zero;

use crate::error::Error;
use crate::rational::Rational;
use crate::sequence::SequenceSpec;

/// Which indexing convention the initial data uses.
///
/// Both forms drive the same underlying recurrence; see [`crate::index`] for
/// the shift between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// Initial values are `u_0 … u_{4k-1}`.
    U,
    /// Initial values are `η_{-4k+1} … η_0`, occupying u-indices `0 … 4k-1`.
    Eta,
}

/// A full problem instance: order parameter, coefficients, initial data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    k: usize,
    a: SequenceSpec,
    b: SequenceSpec,
    initial: Vec<Rational>,
    form: Form,
}

impl SystemSpec {
    /// Build a validated instance: `k ≥ 1` and exactly `4k` initial values.
    pub fn new(
        k: usize,
        a: SequenceSpec,
        b: SequenceSpec,
        initial: Vec<Rational>,
        form: Form,
    ) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        if initial.len() != 4 * k {
            return Err(Error::InitialCount {
                k,
                expected: 4 * k,
                got: initial.len(),
            });
        }
        Ok(Self {
            k,
            a,
            b,
            initial,
            form,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The equation order, `4k`.
    pub fn order(&self) -> usize {
        4 * self.k
    }

    pub fn a(&self) -> &SequenceSpec {
        &self.a
    }

    pub fn b(&self) -> &SequenceSpec {
        &self.b
    }

    /// The `4k` initial values, indexed by u-index `0 … 4k-1`.
    pub fn initial(&self) -> &[Rational] {
        &self.initial
    }

    pub fn form(&self) -> Form {
        self.form
    }

    /// One recurrence step: given the window `u_n … u_{n+4k-1}`, produce
    /// `u_{n+4k}`.
    ///
    /// Only every fourth window entry enters the denominator product.
    /// Errors with [`Error::ZeroDenominator`] when `A_n + B_n·∏` is exactly
    /// zero.
    pub fn step(&self, window: &[Rational], n: usize) -> Result<Rational, Error> {
        assert_eq!(window.len(), self.order(), "window must hold 4k terms");
        let mut product = Rational::from_integer(1.into());
        for t in 0..self.k {
            product *= &window[4 * t];
        }
        let denom = self.a.term(n) + self.b.term(n) * product;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator { n });
        }
        Ok(&window[0] / denom)
    }

    /// Iterate the recurrence up to index `big_n`, producing terms
    /// `u_0 … u_{big_n}`.
    ///
    /// On a zero denominator the orbit truncates and the status records the
    /// first index whose computation failed.
    pub fn iterate(&self, big_n: usize) -> Orbit {
        let order = self.order();
        let mut terms: Vec<Rational> = self
            .initial
            .iter()
            .take(big_n + 1)
            .cloned()
            .collect();
        if big_n + 1 <= order {
            return Orbit {
                terms,
                status: OrbitStatus::Complete,
            };
        }
        for n in 0..=big_n - order {
            match self.step(&terms[n..n + order], n) {
                Ok(next) => terms.push(next),
                Err(Error::ZeroDenominator { .. }) => {
                    return Orbit {
                        terms,
                        status: OrbitStatus::ForbiddenAt(n + order),
                    }
                }
                Err(other) => unreachable!("step can only fail on zero denominator: {other}"),
            }
        }
        Orbit {
            terms,
            status: OrbitStatus::Complete,
        }
    }
}

/// Whether an orbit ran to its requested horizon or hit the forbidden set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitStatus {
    Complete,
    /// The first index whose computation divided by zero; terms before it
    /// are valid.
    ForbiddenAt(usize),
}

/// A computed trajectory `u_0 … u_N`, possibly truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    terms: Vec<Rational>,
    status: OrbitStatus,
}

impl Orbit {
    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn status(&self) -> OrbitStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == OrbitStatus::Complete
    }

    /// Number of computed terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.terms.get(n)
    }
}
