//! Whittaker modules `L = M_phi / I M_phi` with basis `x_lambda w'`,
//! `lambda` a partition of generators in `b-` other than `x(1,0)`, over
//! `S(Z)/I`.
//!
//! The action of `u` on `x_lambda w'` is computed by straightening
//! `u x_lambda` in the enveloping algebra and letting the trailing
//! `n`-factors act on `w'` through the character.

mod character;
mod closed_form;
mod descent;
mod hankel;
mod ideal;
mod solver;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};

pub use character::Character;
pub use closed_form::{sigma, sigma_defect_coefficient, sigma_extension};
pub use descent::{DescentEnd, DescentReport, DescentStep};
pub use hankel::{good_check, hankel_matrix, GoodnessReport, HankelCheck};
pub use ideal::Ideal;
pub use solver::{SolveOutcome, Truncation};

use crate::enveloping::{write_terms, UeaElement};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, Partition};
use crate::poly::CenterPoly;
use crate::Rational;

/// Finite set of `n`-generators used in place of "for all x in n":
/// `2 <= a+i <= sum_max`, `0 <= i <= i_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorCutoff {
    pub sum_max: i64,
    pub i_max: i64,
}

impl Default for GeneratorCutoff {
    fn default() -> Self {
        GeneratorCutoff {
            sum_max: 8,
            i_max: 10,
        }
    }
}

impl GeneratorCutoff {
    pub fn new(sum_max: i64, i_max: i64) -> Self {
        GeneratorCutoff { sum_max, i_max }
    }

    /// Generators in increasing `(a+i, i)` order.
    pub fn generators(&self) -> Vec<GenIndex> {
        (2..=self.sum_max)
            .flat_map(|line| (0..=self.i_max).map(move |i| GenIndex::new(line - i, i)))
            .collect()
    }
}

/// Element of `M_phi / I M_phi` in the basis `x_lambda w'`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    terms: BTreeMap<Partition, CenterPoly>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    /// `w'` itself.
    pub fn vacuum() -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(Partition::empty(), &CenterPoly::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &CenterPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> CenterPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, lambda: Partition, coeff: &CenterPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn scale(&self, c: &Rational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector {
            terms: self
                .terms
                .iter()
                .map(|(l, p)| (l.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// `sum p_lambda x_lambda` as an element of `U(b-)`.
    pub fn lift(&self) -> UeaElement {
        let mut u = UeaElement::zero();
        for (lambda, p) in &self.terms {
            u.add_term(lambda.clone(), p);
        }
        u
    }

    /// Components by `pi`-degree of `|lambda|`.
    pub fn pi_components(&self) -> BTreeMap<i64, ModuleVector> {
        let mut out: BTreeMap<i64, ModuleVector> = BTreeMap::new();
        for (lambda, p) in &self.terms {
            out.entry(lambda.pi_degree())
                .or_default()
                .add_term(lambda.clone(), p);
        }
        out
    }

    /// Least `pi`-degree among the nonzero components.
    pub fn mindeg1(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(Partition::pi_degree)
            .min()
            .ok_or(Error::ZeroElement)
    }

    /// Height of the component of degree `mindeg1`.
    pub fn ell1(&self) -> Result<usize> {
        let t = self.mindeg1()?;
        Ok(self
            .terms
            .keys()
            .filter(|l| l.pi_degree() == t)
            .map(Partition::len)
            .max()
            .unwrap_or(0))
    }

    /// True for `p w'` with `p != 0`.
    pub fn is_vacuum_multiple(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains_key(&Partition::empty())
    }
}

impl Add<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;

    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (l, p) in &rhs.terms {
            out.add_term(l.clone(), p);
        }
        out
    }
}

impl Sub<&ModuleVector> for &ModuleVector {
    type Output = ModuleVector;

    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), " w'")
    }
}

/// Outcome of checking `x v = phi(x) v` over a cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerCheck {
    pub checked: usize,
    /// First generator with nonzero defect, and that defect.
    pub witness: Option<(GenIndex, ModuleVector)>,
}

impl WhittakerCheck {
    pub fn passes(&self) -> bool {
        self.witness.is_none()
    }
}

/// The module `L_{phi, I}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerModule {
    character: Character,
    ideal: Ideal,
}

impl WhittakerModule {
    pub fn new(character: Character, ideal: Ideal) -> Self {
        WhittakerModule { character, ideal }
    }

    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn vacuum(&self) -> ModuleVector {
        self.reduce(&ModuleVector::vacuum())
    }

    /// Builds a canonical vector: parts must lie in `b-`, be nonnegative
    /// and non-central; coefficients are reduced modulo the ideal.
    pub fn vector(
        &self,
        terms: impl IntoIterator<Item = (Partition, CenterPoly)>,
    ) -> Result<ModuleVector> {
        let mut v = ModuleVector::zero();
        for (lambda, p) in terms {
            for &part in lambda.parts() {
                part.checked()?;
                if part.is_central() {
                    return Err(Error::CentralInMonomial);
                }
                if !part.in_borel_minus() {
                    return Err(Error::NotBorelMinus(part));
                }
            }
            v.add_term(lambda, &self.ideal.reduce(&p));
        }
        Ok(v)
    }

    fn reduce(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (l, p) in &v.terms {
            out.add_term(l.clone(), &self.ideal.reduce(p));
        }
        out
    }

    /// `u w'`: trailing `n`-factors of each normal-form term act by `phi`.
    pub fn apply_to_vacuum(&self, u: &UeaElement) -> ModuleVector {
        let projected = u
            .phi_component(&self.character)
            .expect("trailing factors lie in n");
        let mut out = ModuleVector::zero();
        for (lambda, p) in projected.terms() {
            out.add_term(lambda.clone(), &self.ideal.reduce(p));
        }
        out
    }

    pub fn act_element(&self, u: &UeaElement, v: &ModuleVector) -> ModuleVector {
        self.apply_to_vacuum(&u.multiply(&v.lift()))
    }

    pub fn act(&self, x: GenIndex, v: &ModuleVector) -> Result<ModuleVector> {
        Ok(self.act_element(&UeaElement::generator(x)?, v))
    }

    /// `x v - phi(x) v` for `x` in `n`.
    pub fn defect(&self, x: GenIndex, v: &ModuleVector) -> Result<ModuleVector> {
        x.checked()?;
        if !x.is_positive() {
            return Err(Error::NotPositive(x));
        }
        let phi_x = self.character.eval(x)?;
        Ok(&self.act(x, v)? - &v.scale(&phi_x))
    }

    pub fn is_whittaker(&self, v: &ModuleVector, cutoff: GeneratorCutoff) -> WhittakerCheck {
        let gens = cutoff.generators();
        for (k, &x) in gens.iter().enumerate() {
            let d = self.defect(x, v).expect("cutoff generators lie in n");
            if !d.is_zero() {
                return WhittakerCheck {
                    checked: k + 1,
                    witness: Some((x, d)),
                };
            }
        }
        WhittakerCheck {
            checked: gens.len(),
            witness: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, i: i64) -> GenIndex {
        GenIndex::new(a, i)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn vec_of(m: &WhittakerModule, terms: &[(i64, &[(i64, i64)])]) -> ModuleVector {
        m.vector(terms.iter().map(|(c, parts)| {
            (
                Partition::from_unsorted(parts.iter().map(|&(a, i)| g(a, i)).collect()),
                CenterPoly::from_int(*c),
            )
        }))
        .unwrap()
    }

    fn ones() -> WhittakerModule {
        WhittakerModule::new(Character::constant(q(1)), Ideal::maximal(q(1)))
    }

    #[test]
    fn act_examples() {
        let m = ones();
        let v = vec_of(&m, &[(1, &[(0, 1)])]);
        let expected = vec_of(&m, &[(1, &[(0, 1)]), (-1, &[])]);
        assert_eq!(m.act(g(2, 0), &v).unwrap(), expected);

        for x in GeneratorCutoff::new(5, 5).generators() {
            let expected = m.vacuum().scale(&m.character().eval(x).unwrap());
            assert_eq!(m.act(x, &m.vacuum()).unwrap(), expected);
        }

        let f = WhittakerModule::new(Character::Factorial, Ideal::Zero);
        assert_eq!(
            f.act(g(0, 2), &f.vacuum()).unwrap(),
            f.vacuum().scale(&q(2))
        );
    }

    #[test]
    fn defect_examples() {
        let m = ones();
        assert!(m.defect(g(2, 0), &m.vacuum()).unwrap().is_zero());
        let v = vec_of(&m, &[(1, &[(0, 1)])]);
        assert_eq!(m.defect(g(2, 0), &v).unwrap(), vec_of(&m, &[(-1, &[])]));
        let lin = vec_of(&m, &[(2, &[(0, 1)]), (-1, &[(-1, 2)])]);
        assert!(m.defect(g(2, 0), &lin).unwrap().is_zero());
        assert_eq!(m.defect(g(0, 1), &lin), Err(Error::NotPositive(g(0, 1))));
    }

    #[test]
    fn whittaker_checks() {
        let m = ones();
        assert!(m
            .is_whittaker(&m.vacuum(), GeneratorCutoff::default())
            .passes());
        let v = vec_of(&m, &[(1, &[(0, 1)])]);
        let check = m.is_whittaker(&v, GeneratorCutoff::new(2, 0));
        assert_eq!(check.witness.map(|(x, _)| x), Some(g(2, 0)));
    }

    #[test]
    fn center_acts_through_ideal() {
        let v_parts: &[(i64, &[(i64, i64)])] = &[(3, &[(0, 1), (-2, 0)]), (1, &[])];
        let free = WhittakerModule::new(Character::Factorial, Ideal::Zero);
        let v = vec_of(&free, v_parts);
        let zv = free.act(GenIndex::CENTRAL, &v).unwrap();
        for (l, p) in v.terms() {
            assert_eq!(zv.coeff(l), p.shift(1));
        }
        let quot = WhittakerModule::new(Character::Factorial, Ideal::maximal(q(5)));
        let v = vec_of(&quot, v_parts);
        assert_eq!(quot.act(GenIndex::CENTRAL, &v).unwrap(), v.scale(&q(5)));
    }

    #[test]
    fn vector_validation() {
        let m = ones();
        let bad = m.vector([(Partition::from_unsorted(vec![g(2, 0)]), CenterPoly::one())]);
        assert_eq!(bad, Err(Error::NotBorelMinus(g(2, 0))));
        let bad = m.vector([(Partition::from_unsorted(vec![g(1, 0)]), CenterPoly::one())]);
        assert_eq!(bad, Err(Error::CentralInMonomial));
    }

    #[test]
    fn degree_statistics() {
        let m = WhittakerModule::new(Character::Factorial, Ideal::Zero);
        let v = vec_of(&m, &[(1, &[(-1, 0), (0, 1)]), (2, &[(-1, 1)]), (1, &[])]);
        assert_eq!(v.mindeg1(), Ok(-2));
        assert_eq!(v.ell1(), Ok(2));
        assert_eq!(v.pi_components().len(), 3);
        assert_eq!(ModuleVector::zero().mindeg1(), Err(Error::ZeroElement));
    }
}
