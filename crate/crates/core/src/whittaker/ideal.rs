use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::CenterPoly;
use crate::Rational;

/// An ideal of `S(Z) = Q[z]`, given by its monic generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ideal {
    Zero,
    Principal(CenterPoly),
}

impl Ideal {
    /// Requires a monic generator; the zero polynomial gives the zero ideal.
    pub fn principal(generator: CenterPoly) -> Result<Self> {
        if generator.is_zero() {
            return Ok(Ideal::Zero);
        }
        if !generator.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(Ideal::Principal(generator))
    }

    /// The ideal generated by `p`, rescaled to a monic generator.
    pub fn generated_by(p: &CenterPoly) -> Self {
        match p.leading() {
            None => Ideal::Zero,
            Some(lead) => Ideal::Principal(p.scale(&lead.recip())),
        }
    }

    /// `(z - c)`
    pub fn maximal(c: Rational) -> Self {
        Ideal::Principal(CenterPoly::from_coeffs(vec![-c, Rational::one()]))
    }

    pub fn generator(&self) -> CenterPoly {
        match self {
            Ideal::Zero => CenterPoly::zero(),
            Ideal::Principal(g) => g.clone(),
        }
    }

    pub fn reduce(&self, p: &CenterPoly) -> CenterPoly {
        match self {
            Ideal::Zero => p.clone(),
            Ideal::Principal(g) => p.rem_monic(g),
        }
    }

    /// `c` when the ideal is `(z - c)`.
    pub fn linear_root(&self) -> Option<Rational> {
        match self {
            Ideal::Principal(g) if g.degree() == Some(1) => Some(-g.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn contains(&self, p: &CenterPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Residue of `p` as a rational, valid when the quotient is `Q`.
    pub(crate) fn residue_scalar(&self, p: &CenterPoly) -> Option<Rational> {
        let r = self.reduce(p);
        match r.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(r.constant_term()),
            Some(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn reduction_modulo_linear() {
        let i = Ideal::maximal(q(2));
        assert_eq!(i.linear_root(), Some(q(2)));
        let p = CenterPoly::from_coeffs(vec![q(1), q(0), q(1)]);
        assert_eq!(i.reduce(&p), CenterPoly::from_int(5));
        assert!(i.contains(&CenterPoly::from_coeffs(vec![q(-2), q(1)])));
    }

    #[test]
    fn zero_ideal_is_free() {
        let p = CenterPoly::z_power(3);
        assert_eq!(Ideal::Zero.reduce(&p), p);
        assert_eq!(Ideal::Zero.linear_root(), None);
    }

    #[test]
    fn monic_required() {
        let p = CenterPoly::from_coeffs(vec![q(1), q(2)]);
        assert_eq!(Ideal::principal(p.clone()), Err(Error::NotMonic));
        assert_eq!(
            Ideal::generated_by(&p),
            Ideal::maximal(Rational::new((-1).into(), 2.into()))
        );
        assert_eq!(Ideal::principal(CenterPoly::zero()), Ok(Ideal::Zero));
    }
}
