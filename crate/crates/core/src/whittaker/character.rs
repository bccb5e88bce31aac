use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::GenIndex;
use crate::Rational;

/// A character of `n`, fixed by its values `c_m = phi(x(2-m, m))` on the
/// line `a + i = 2`.
///
/// Every generator with `a + i >= 3` is a bracket of two elements of `n`,
/// so any character vanishes there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Character {
    Constant(Rational),
    /// `c * q^m`
    Geometric {
        c: Rational,
        q: Rational,
    },
    /// `sum_k coeffs[k] * m^k`
    Polynomial(Vec<Rational>),
    /// `m!`
    Factorial,
    /// `values[m]` for listed `m`, `tail` afterwards
    Explicit {
        values: Vec<Rational>,
        tail: Rational,
    },
}

impl Character {
    pub fn constant(c: Rational) -> Self {
        Character::Constant(c)
    }

    /// `c_m`
    pub fn line_value(&self, m: u64) -> Rational {
        match self {
            Character::Constant(c) => c.clone(),
            Character::Geometric { c, q } => c * num_traits::pow(q.clone(), m as usize),
            Character::Polynomial(coeffs) => {
                let m = Rational::from_integer(m.into());
                coeffs
                    .iter()
                    .rev()
                    .fold(Rational::zero(), |acc, k| acc * &m + k)
            }
            Character::Factorial => {
                let f = (1..=m).fold(BigInt::one(), |acc, k| acc * k);
                Rational::from_integer(f)
            }
            Character::Explicit { values, tail } => values
                .get(m as usize)
                .cloned()
                .unwrap_or_else(|| tail.clone()),
        }
    }

    /// `phi(x(a,i))` for a generator in `n`.
    pub fn eval(&self, g: GenIndex) -> Result<Rational> {
        g.checked()?;
        match g.line() {
            2 => Ok(self.line_value(g.i as u64)),
            l if l > 2 => Ok(Rational::zero()),
            _ => Err(Error::NotPositive(g)),
        }
    }

    /// Smallest `m <= m_max` with `c_m = 0`.
    pub fn first_zero(&self, m_max: u64) -> Option<u64> {
        (0..=m_max).find(|&m| self.line_value(m).is_zero())
    }

    /// `c_m != 0` for all `0 <= m <= m_max`.
    pub fn is_nonsingular(&self, m_max: u64) -> bool {
        self.first_zero(m_max).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn line_values() {
        assert_eq!(Character::Factorial.line_value(0), q(1));
        assert_eq!(Character::Factorial.line_value(5), q(120));
        let geo = Character::Geometric {
            c: q(3),
            q: Rational::new(1.into(), 2.into()),
        };
        assert_eq!(geo.line_value(2), Rational::new(3.into(), 4.into()));
        let poly = Character::Polynomial(vec![q(1), q(0), q(2)]);
        assert_eq!(poly.line_value(3), q(19));
        let ex = Character::Explicit {
            values: vec![q(4), q(5)],
            tail: q(7),
        };
        assert_eq!(ex.line_value(1), q(5));
        assert_eq!(ex.line_value(9), q(7));
    }

    #[test]
    fn eval_on_generators() {
        let phi = Character::Factorial;
        assert_eq!(phi.eval(GenIndex::new(0, 2)).unwrap(), q(2));
        assert_eq!(phi.eval(GenIndex::new(2, 1)).unwrap(), q(0));
        assert_eq!(
            phi.eval(GenIndex::new(0, 1)),
            Err(Error::NotPositive(GenIndex::new(0, 1)))
        );
    }

    #[test]
    fn singularity() {
        assert!(Character::Factorial.is_nonsingular(20));
        let p = Character::Polynomial(vec![q(-2), q(1)]);
        assert_eq!(p.first_zero(10), Some(2));
    }
}
