//! Exact analysis of a family of strided rational difference equations.
//!
//! The crate studies the order-`4k` recurrence
//!
//! ```text
//! u_{n+4k} = u_n / (A_n + B_n · u_n u_{n+4} ⋯ u_{n+4k-4})
//! ```
//!
//! over exact rational arithmetic, together with its delayed (η) formulation
//! `η_{n+1} = η_{n-4k+1} / (a_n + b_n · η_{n-1} η_{n-5} ⋯ η_{n-4k+3})`.
//! It provides:
//!
//! - [`system`]: problem specification and the brute-force iteration oracle,
//!   with forbidden-set (zero-denominator) tracking;
//! - [`closed_form`]: product-form solutions for generic periodic
//!   coefficients, for constants, and for the special constants `a = ±1`,
//!   each certified against the oracle;
//! - [`invariants`]: the reciprocal-product invariant `r_n`, its first-order
//!   affine reduction, and exact certificates for the recurrence's symmetry
//!   generators via root-of-unity exponent arithmetic;
//! - [`analysis`]: equilibria, characteristic roots, stability
//!   classification, and periodicity prediction/detection.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to use concurrently.
//!
//! # Example
//!
//! ```
//! use rdeq::{rat, Form, SequenceSpec, SystemSpec};
//!
//! // u_{n+4} = u_n / (1 + u_n), starting from 1 in every residue class.
//! let spec = SystemSpec::new(
//!     1,
//!     SequenceSpec::constant(rat(1, 1)),
//!     SequenceSpec::constant(rat(1, 1)),
//!     vec![rat(1, 1); 4],
//!     Form::U,
//! )?;
//! let orbit = spec.iterate(12);
//! assert_eq!(orbit.get(12), Some(&rat(1, 4)));
//! # Ok::<(), rdeq::Error>(())
//! ```

pub mod analysis;
pub mod closed_form;
pub mod error;
pub mod index;
pub mod invariants;
pub mod rational;
pub mod sequence;
pub mod system;

#[cfg(test)]
mod testutil;

pub use error::Error;
pub use rational::{decimal, parse_rational, rat, Rational};
pub use sequence::SequenceSpec;
pub use system::{Form, Orbit, OrbitStatus, SystemSpec};
