//! Periodic coefficient sequences.

use crate::error::Error;
use crate::rational::Rational;

/// A coefficient sequence `A_n` or `B_n`: a non-empty list of rationals read
/// cyclically, `term(n) = values[n mod p]`. A constant sequence is the
/// period-one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    values: Vec<Rational>,
}

impl SequenceSpec {
    /// Constant sequence with value `v`.
    pub fn constant(v: Rational) -> Self {
        Self { values: vec![v] }
    }

    /// Periodic sequence cycling through `values`.
    pub fn periodic(values: Vec<Rational>) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    /// The `n`-th term.
    pub fn term(&self, n: usize) -> &Rational {
        &self.values[n % self.values.len()]
    }

    /// Period length (1 for constants).
    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// The single value this sequence takes, if it takes only one.
    ///
    /// A periodic sequence whose entries all coincide counts as constant.
    pub fn constant_value(&self) -> Option<&Rational> {
        let first = &self.values[0];
        self.values.iter().all(|v| v == first).then_some(first)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}
