//! Shifted Hankel matrices of a character and the truncated goodness test.
//!
//! `H^(n,s)` has entry `c_{m+j+s-1}` at row `m >= 1`, column `0 <= j <= n`.
//! A nonsingular character is good when every `H^(n,s)` has rank `n + 1`;
//! nonvanishing of `det G^(n,s)`, the leading `(n+1) x (n+1)` block, is
//! sufficient. Verdicts here only cover the finite range that was checked.

use num_traits::Zero;

use super::Character;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::Rational;

/// The first `rows` rows of `H^(n,s)`.
pub fn hankel_matrix(phi: &Character, n: usize, s: usize, rows: usize) -> Result<RationalMatrix> {
    if n < 1 || s < 1 {
        return Err(Error::InvalidParameter(format!(
            "Hankel indices must satisfy n, s >= 1 (got n = {n}, s = {s})"
        )));
    }
    let entries = (1..=rows)
        .flat_map(|m| (0..=n).map(move |j| phi.line_value((m + j + s - 1) as u64)))
        .collect();
    RationalMatrix::new(rows, n + 1, entries)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelCheck {
    pub n: usize,
    pub s: usize,
    pub rows: usize,
    pub rank: usize,
    pub det_g: Rational,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub checks: Vec<HankelCheck>,
    /// Largest `m` such that `c_m` entered some matrix.
    pub max_line_index: u64,
    /// First `m <= max_line_index` with `c_m = 0`.
    pub singular_at: Option<u64>,
    /// Nonsingular on the inspected range and every rank check passed.
    pub passes_at_truncation: bool,
}

/// Checks `rank H^(n,s) = n + 1` for `1 <= n <= n_max`, `1 <= s <= s_max`
/// using `m_max` rows (default `n + 1`), and records `det G^(n,s)`.
pub fn good_check(
    phi: &Character,
    n_max: usize,
    s_max: usize,
    m_max: Option<usize>,
) -> Result<GoodnessReport> {
    if n_max < 1 || s_max < 1 {
        return Err(Error::InvalidParameter(
            "n_max and s_max must be >= 1".to_string(),
        ));
    }
    let mut checks = Vec::new();
    let mut max_line_index = 0u64;
    for n in 1..=n_max {
        for s in 1..=s_max {
            let rows = m_max.unwrap_or(n + 1);
            let h = hankel_matrix(phi, n, s, rows)?;
            let rank = h.rank();
            let det_g = hankel_matrix(phi, n, s, n + 1)?.det()?;
            max_line_index = max_line_index.max((rows.max(n + 1) + n + s - 1) as u64);
            checks.push(HankelCheck {
                n,
                s,
                rows,
                rank,
                det_g,
                passes: rank == n + 1,
            });
        }
    }
    let singular_at = phi.first_zero(max_line_index);
    let passes_at_truncation = singular_at.is_none() && checks.iter().all(|c| c.passes);
    Ok(GoodnessReport {
        checks,
        max_line_index,
        singular_at,
        passes_at_truncation,
    })
}

impl HankelCheck {
    pub fn det_nonzero(&self) -> bool {
        !self.det_g.is_zero()
    }
}
