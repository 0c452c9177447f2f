//! Exact rational scalars and their text renderings.
//!
//! Every orbit term, coefficient, and invariant in this crate is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Equality tests throughout the crate (periodicity
//! detection, oracle comparisons) rely on this exactness; nothing here ever
//! rounds.
//!
//! The text format is `p/q` or plain `p` with an optional leading minus and
//! `q > 0`, e.g. `-1/3`. It is used in config files and CSV output.

use num::bigint::{BigInt, Sign};
use num::{One, Signed, Zero};

use crate::error::Error;

/// The universal scalar: an arbitrary-precision fraction in lowest terms.
pub type Rational = num::BigRational;

/// Shorthand constructor from machine integers.
///
/// Panics if `den == 0`; intended for literals in code and tests.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse the `p/q` (or plain `p`) text format.
///
/// The denominator must be a positive integer; the sign belongs to the
/// numerator. Whitespace is not accepted.
pub fn parse_rational(input: &str) -> Result<Rational, Error> {
    let invalid = || Error::InvalidRational {
        input: input.to_string(),
    };
    let (num_text, den_text) = match input.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (input, None),
    };
    let numer: BigInt = num_text.parse().map_err(|_| invalid())?;
    let denom: BigInt = match den_text {
        Some(d) => d.parse().map_err(|_| invalid())?,
        None => BigInt::one(),
    };
    if denom.sign() != Sign::Plus {
        return Err(invalid());
    }
    Ok(Rational::new(numer, denom))
}

/// Render `q` in decimal scientific notation with `sig` significant digits,
/// computed by exact integer long division (round half away from zero).
///
/// The output shape is `-d.ddd…e±x`, so e.g. `-2` renders with 17 digits as
/// `-2.0000000000000000e0`. Deterministic across platforms by construction.
pub fn decimal(q: &Rational, sig: usize) -> String {
    assert!(sig >= 1, "need at least one significant digit");
    if q.is_zero() {
        return format!("0.{}e0", "0".repeat(sig - 1));
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let p = q.numer().abs();
    let d = q.denom().clone();

    // Decimal exponent e with 10^e <= p/d < 10^(e+1), from digit counts.
    let ten = BigInt::from(10);
    let mut e = p.to_string().len() as i64 - d.to_string().len() as i64;
    let below = if e >= 0 {
        p < &d * pow10(&ten, e)
    } else {
        &p * pow10(&ten, -e) < d
    };
    if below {
        e -= 1;
    }

    // Mantissa m = round(p · 10^(sig-1-e) / d), then fix rounding overflow.
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (&p * pow10(&ten, shift), d)
    } else {
        (p, &d * pow10(&ten, -shift))
    };
    let (mut m, r) = num::Integer::div_rem(&num, &den);
    if &r * 2 >= den {
        m += 1;
    }
    if m == num::pow(ten.clone(), sig) {
        m /= 10;
        e += 1;
    }

    let digits = m.to_string();
    debug_assert_eq!(digits.len(), sig);
    format!("{sign}{}.{}e{e}", &digits[..1], &digits[1..])
}

fn pow10(ten: &BigInt, exp: i64) -> BigInt {
    if exp <= 0 {
        BigInt::one()
    } else {
        num::pow(ten.clone(), exp as usize)
    }
}

/// Nearest-double approximation of `q`, for the floating-point side of the
/// analysis routines.
pub fn to_f64(q: &Rational) -> f64 {
    num::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// `base^exp` for a possibly negative exponent.
///
/// Returns `None` when `base` is zero and `exp` is negative.
pub(crate) fn pow_signed(base: &Rational, exp: i64) -> Option<Rational> {
    if exp >= 0 {
        Some(num::pow(base.clone(), exp as usize))
    } else if base.is_zero() {
        None
    } else {
        Some(num::pow(base.clone(), (-exp) as usize).recip())
    }
}
