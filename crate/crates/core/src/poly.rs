//! Polynomials in the central element `z = x(1,0)` with rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Coefficients in ascending powers of `z`, without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CenterPoly(Vec<Rational>);

impl CenterPoly {
    pub fn zero() -> Self {
        CenterPoly(Vec::new())
    }

    pub fn one() -> Self {
        CenterPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        CenterPoly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        CenterPoly::constant(Rational::from_integer(c.into()))
    }

    /// `z^k`
    pub fn z_power(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        CenterPoly(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CenterPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// The constant term (zero for the zero polynomial).
    pub fn constant_term(&self) -> Rational {
        self.0.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> CenterPoly {
        if c.is_zero() {
            return CenterPoly::zero();
        }
        CenterPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> CenterPoly {
        if self.is_zero() {
            return CenterPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        CenterPoly(coeffs)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &CenterPoly) -> CenterPoly {
        assert!(modulus.is_monic(), "modulus must be monic");
        let m = modulus.0.len() - 1;
        if self.0.len() <= m {
            return self.clone();
        }
        let mut r = self.0.clone();
        for top in (m..r.len()).rev() {
            let lead = r[top].clone();
            if lead.is_zero() {
                continue;
            }
            for (k, c) in modulus.0.iter().enumerate() {
                r[top - m + k] -= &lead * c;
            }
        }
        r.truncate(m);
        CenterPoly::from_coeffs(r)
    }

    /// Nonzero coefficients as `(power, coefficient)`.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add<&CenterPoly> for &CenterPoly {
    type Output = CenterPoly;

    fn add(self, rhs: &CenterPoly) -> CenterPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CenterPoly> for CenterPoly {
    fn add_assign(&mut self, rhs: &CenterPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), Rational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }
}

impl SubAssign<&CenterPoly> for CenterPoly {
    fn sub_assign(&mut self, rhs: &CenterPoly) {
        *self += &-rhs;
    }
}

impl Sub<&CenterPoly> for &CenterPoly {
    type Output = CenterPoly;

    fn sub(self, rhs: &CenterPoly) -> CenterPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CenterPoly {
    type Output = CenterPoly;

    fn neg(self) -> CenterPoly {
        CenterPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&CenterPoly> for &CenterPoly {
    type Output = CenterPoly;

    fn mul(self, rhs: &CenterPoly) -> CenterPoly {
        if self.is_zero() || rhs.is_zero() {
            return CenterPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (p, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in rhs.0.iter().enumerate() {
                out[p + q] += a * b;
            }
        }
        CenterPoly::from_coeffs(out)
    }
}

impl fmt::Display for CenterPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.iter_terms() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
