//! Index arithmetic mod 4 and the shift between the two equation forms.
//!
//! The recurrence couples only indices congruent mod 4, so every global index
//! `r` splits as `r = 4·div4(r) + rem4(r)`: a residue class and a position
//! (block) within it. The closed forms route all coefficient and initial-value
//! lookups through this decomposition.
//!
//! The delayed (η) form of the equation is the same recurrence read through
//! the shift `η_m = u_{m + 4k - 1}`: its initial values `η_{-4k+1} … η_0`
//! occupy u-indices `0 … 4k-1`.

use crate::error::Error;

/// Residue of `r` mod 4.
pub fn rem4(r: usize) -> usize {
    r % 4
}

/// Block of `r`: the quotient in `r = 4·div4(r) + rem4(r)`.
pub fn div4(r: usize) -> usize {
    r / 4
}

/// Map an η-form index to the underlying u-form index: `n_eta + 4k - 1`.
///
/// Errors with [`Error::IndexOutOfRange`] when `n_eta < -4k + 1`, i.e. before
/// the first initial value.
pub fn eta_to_u_index(k: usize, n_eta: i64) -> Result<usize, Error> {
    let min = -(4 * k as i64) + 1;
    if n_eta < min {
        return Err(Error::IndexOutOfRange {
            index: n_eta,
            min,
            max: i64::MAX,
        });
    }
    Ok((n_eta + 4 * k as i64 - 1) as usize)
}

/// Inverse of [`eta_to_u_index`]: `n_u - (4k - 1)`.
pub fn u_to_eta_index(k: usize, n_u: usize) -> i64 {
    n_u as i64 - (4 * k as i64 - 1)
}
