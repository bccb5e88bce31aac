//! Closed form for the coefficient of `x_lambda w'` in
//! `sum_a b_a (y_m - phi(y_m)) x_{lambda^(a)} w'`, where `lambda` is built
//! from `sigma_k = (1-s-k, s+k)`, `lambda^(a)` adds one copy of
//! `sigma_a`, and `y_m = x(2-m, m)`.
//!
//! Since `[y_m, x_{sigma_j}] = -(s+j) x(3-m-s-j, m+s+j-1)` lands on the
//! `a+i = 2` line, the coefficient is
//!
//! ```text
//! c_lambda = sum_j b_j (-s-j) d_j c_{m+j+s-1},   d_j = lambda(sigma_j) + 1.
//! ```

use num_traits::Zero;

use super::Character;
use crate::error::{Error, Result};
use crate::lie::{GenIndex, Partition};
use crate::Rational;

pub fn sigma(s: i64, k: i64) -> GenIndex {
    GenIndex::new(1 - s - k, s + k)
}

/// `lambda^(a)`: `lambda` with one more copy of `sigma_a`.
pub fn sigma_extension(lambda: &Partition, a: i64, s: i64) -> Partition {
    lambda.insert(sigma(s, a))
}

/// `sigma_k` index of each part, if all parts belong to `{sigma_0..sigma_n}`.
fn sigma_indices(lambda: &Partition, s: i64, n: i64) -> Result<Vec<i64>> {
    lambda
        .parts()
        .iter()
        .map(|p| {
            let k = p.i - s;
            if p.line() == 1 && (0..=n).contains(&k) {
                Ok(k)
            } else {
                Err(Error::NotSigmaFamily { s, n })
            }
        })
        .collect()
}

/// `c_lambda` for coefficients `b[a] = b_{lambda^(a)}`, `0 <= a <= n`.
pub fn sigma_defect_coefficient(
    lambda: &Partition,
    m: i64,
    s: i64,
    n: i64,
    b: &[Rational],
    phi: &Character,
) -> Result<Rational> {
    if s < 1 || n < 0 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "need s >= 1, n >= 0, m >= 1 (got s = {s}, n = {n}, m = {m})"
        )));
    }
    if b.len() as i64 != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: (n + 1) as usize,
            got: b.len(),
        });
    }
    let indices = sigma_indices(lambda, s, n)?;
    let mut total = Rational::zero();
    for (j, bj) in b.iter().enumerate() {
        if bj.is_zero() {
            continue;
        }
        let j = j as i64;
        let d = indices.iter().filter(|&&k| k == j).count() as i64 + 1;
        let factor = Rational::from_integer((-(s + j) * d).into());
        let value = phi.line_value((m + j + s - 1) as u64);
        total += bj * factor * value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn null_partition_constant_character() {
        let phi = Character::constant(q(1));
        let lam = Partition::empty();
        for m in 1..4 {
            let c = sigma_defect_coefficient(&lam, m, 1, 1, &[q(5), q(7)], &phi).unwrap();
            assert_eq!(c, q(-5 - 14));
            let c = sigma_defect_coefficient(&lam, m, 1, 1, &[q(-2), q(1)], &phi).unwrap();
            assert!(c.is_zero());
        }
    }

    #[test]
    fn zero_coefficients_vanish() {
        let lam = Partition::from_unsorted(vec![sigma(2, 0), sigma(2, 1)]);
        let c = sigma_defect_coefficient(&lam, 3, 2, 2, &[q(0), q(0), q(0)], &Character::Factorial)
            .unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn multiplicity_bump() {
        // lambda = (sigma_0), s = n = m = 1: -2 b0 1! - 2 b1 2!
        let lam = Partition::from_unsorted(vec![sigma(1, 0)]);
        let c =
            sigma_defect_coefficient(&lam, 1, 1, 1, &[q(3), q(5)], &Character::Factorial).unwrap();
        assert_eq!(c, q(-2 * 3 - 2 * 5 * 2));
    }

    #[test]
    fn rejects_foreign_parts() {
        let lam = Partition::from_unsorted(vec![GenIndex::new(-1, 0)]);
        assert_eq!(
            sigma_defect_coefficient(&lam, 1, 1, 1, &[q(1), q(1)], &Character::Factorial),
            Err(Error::NotSigmaFamily { s: 1, n: 1 })
        );
        let lam = Partition::from_unsorted(vec![sigma(1, 3)]);
        assert!(
            sigma_defect_coefficient(&lam, 1, 1, 1, &[q(1), q(1)], &Character::Factorial).is_err()
        );
    }
}
