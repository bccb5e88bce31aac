//! The universal enveloping algebra as a free module over `S(Z) = Q[z]`
//! with basis the ordered monomials `x_lambda`, `lambda` a partition of
//! generators other than the central `x(1,0)`.
//!
//! Products are brought to normal form by adjacent transpositions
//! `x_b x_a = x_a x_b + [x_b, x_a]`; every correction term has strictly
//! smaller height, so the rewriting terminates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{structure_constant, GenIndex, Partition, QDegree};
use crate::poly::CenterPoly;
use crate::whittaker::Character;
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<Partition, CenterPoly>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement::default()
    }

    pub fn one() -> Self {
        UeaElement::central(CenterPoly::one())
    }

    /// `p(z) * 1`
    pub fn central(p: CenterPoly) -> Self {
        let mut u = UeaElement::zero();
        u.add_term(Partition::empty(), &p);
        u
    }

    /// The generator `x(a,i)`; `x(1,0)` becomes `z * 1`.
    pub fn generator(g: GenIndex) -> Result<Self> {
        g.checked()?;
        if g.is_central() {
            return Ok(UeaElement::central(CenterPoly::z_power(1)));
        }
        Ok(UeaElement::from_monomial(
            Partition::from_sorted_unchecked(vec![g]),
            CenterPoly::one(),
        ))
    }

    /// `coeff * x_lambda` for a sorted partition of non-central generators.
    pub fn monomial(coeff: CenterPoly, lambda: Partition) -> Result<Self> {
        for p in lambda.parts() {
            p.checked()?;
            if p.is_central() {
                return Err(Error::CentralInMonomial);
            }
        }
        Ok(UeaElement::from_monomial(lambda, coeff))
    }

    /// Normal form of `coeff * x_{w_1} x_{w_2} ... x_{w_r}` for an arbitrary word.
    pub fn from_word(coeff: CenterPoly, word: &[GenIndex]) -> Result<Self> {
        let mut u = UeaElement::central(coeff);
        let mut s = Straightener::default();
        for &g in word {
            g.checked()?;
            u = s.element_times(&u, g);
        }
        Ok(u)
    }

    pub(crate) fn from_monomial(lambda: Partition, coeff: CenterPoly) -> Self {
        let mut u = UeaElement::zero();
        u.add_term(lambda, &coeff);
        u
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

    pub(crate) fn add_term(&mut self, lambda: Partition, coeff: &CenterPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &UeaElement, factor: &CenterPoly) {
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), &(c * factor));
        }
    }

    pub fn scale(&self, c: &Rational) -> UeaElement {
        self.scale_poly(&CenterPoly::constant(c.clone()))
    }

    pub fn scale_poly(&self, p: &CenterPoly) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, p);
        out
    }

    pub fn multiply(&self, other: &UeaElement) -> UeaElement {
        let mut s = Straightener::default();
        let mut out = UeaElement::zero();
        for (mu, q) in &other.terms {
            let mut partial = self.clone();
            for &g in mu.parts() {
                partial = s.element_times(&partial, g);
            }
            out.add_scaled(&partial, q);
        }
        out
    }

    /// Commutator `uv - vu`.
    pub fn lie_bracket(&self, other: &UeaElement) -> UeaElement {
        &self.multiply(other) - &other.multiply(self)
    }

    /// Largest number of non-central factors over all terms.
    pub fn height(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(Partition::len)
            .max()
            .ok_or(Error::ZeroElement)
    }

    /// Decomposition into `Q`-homogeneous components. A term `z^k x_lambda`
    /// has degree `|lambda| * (1,0)^k`.
    pub fn grade_split(&self) -> BTreeMap<QDegree, UeaElement> {
        let mut out: BTreeMap<QDegree, UeaElement> = BTreeMap::new();
        for (lambda, p) in &self.terms {
            let base = lambda.degree();
            for (k, c) in p.iter_terms() {
                let deg = base.star(QDegree::new(1, 0).pow(k as u64));
                out.entry(deg)
                    .or_default()
                    .add_term(lambda.clone(), &CenterPoly::z_power(k).scale(c));
            }
        }
        out
    }

    pub fn mindeg(&self) -> Result<QDegree> {
        self.grade_split()
            .into_keys()
            .next()
            .ok_or(Error::ZeroElement)
    }

    /// Least `pi`-degree among the terms.
    pub fn mindeg1(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(Partition::pi_degree)
            .min()
            .ok_or(Error::ZeroElement)
    }

    /// True if no generator from `n` occurs.
    pub fn in_borel_minus(&self) -> bool {
        self.terms
            .keys()
            .all(|l| l.parts().iter().all(|p| p.in_borel_minus()))
    }

    /// The `U(b-)` component of `self` relative to `U(B) = U(b-) + I_phi`:
    /// each trailing run of `n`-generators is replaced by its character value.
    pub fn phi_component(&self, phi: &Character) -> Result<UeaElement> {
        let mut out = UeaElement::zero();
        for (lambda, p) in &self.terms {
            let split = lambda.parts().partition_point(|g| g.in_borel_minus());
            let (lower, upper) = lambda.parts().split_at(split);
            let mut scalar = Rational::one();
            for &g in upper {
                scalar *= phi.eval(g)?;
                if scalar.is_zero() {
                    break;
                }
            }
            if scalar.is_zero() {
                continue;
            }
            out.add_term(
                Partition::from_sorted_unchecked(lower.to_vec()),
                &p.scale(&scalar),
            );
        }
        Ok(out)
    }
}

impl Add<&UeaElement> for &UeaElement {
    type Output = UeaElement;

    fn add(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &CenterPoly::one());
        out
    }
}

impl Sub<&UeaElement> for &UeaElement {
    type Output = UeaElement;

    fn sub(self, rhs: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &CenterPoly::from_int(-1));
        out
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;

    fn neg(self) -> UeaElement {
        self.scale_poly(&CenterPoly::from_int(-1))
    }
}

impl Mul<&UeaElement> for &UeaElement {
    type Output = UeaElement;

    fn mul(self, rhs: &UeaElement) -> UeaElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), "")
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Partition, &'a CenterPoly)>,
    suffix: &str,
) -> fmt::Result {
    let mut any = false;
    for (lambda, p) in terms {
        if any {
            f.write_str(" + ")?;
        }
        any = true;
        let coeff = p.to_string();
        match (lambda.is_empty(), coeff.as_str()) {
            (true, "1") if !suffix.is_empty() => f.write_str(suffix.trim_start())?,
            (true, _) => write!(f, "({coeff}){suffix}")?,
            (false, "1") => write!(f, "{lambda}{suffix}")?,
            (false, _) => write!(f, "({coeff}) {lambda}{suffix}")?,
        }
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

/// Right multiplication by single generators, memoized per call site.
#[derive(Default)]
struct Straightener {
    memo: HashMap<(Partition, GenIndex), UeaElement>,
}

impl Straightener {
    fn element_times(&mut self, u: &UeaElement, g: GenIndex) -> UeaElement {
        let mut out = UeaElement::zero();
        for (lambda, p) in &u.terms {
            let prod = self.monomial_times(lambda, g);
            out.add_scaled(&prod, p);
        }
        out
    }

    /// `x_lambda * x_g` in normal form.
    fn monomial_times(&mut self, lambda: &Partition, g: GenIndex) -> UeaElement {
        if g.is_central() {
            return UeaElement::from_monomial(lambda.clone(), CenterPoly::z_power(1));
        }
        let last = match lambda.last() {
            Some(h) if h > g => h,
            _ => {
                let mut parts = lambda.parts().to_vec();
                parts.push(g);
                return UeaElement::from_monomial(
                    Partition::from_sorted_unchecked(parts),
                    CenterPoly::one(),
                );
            }
        };
        let key = (lambda.clone(), g);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let rest = Partition::from_sorted_unchecked(lambda.parts()[..lambda.len() - 1].to_vec());
        // x_rest x_h x_g = (x_rest x_g) x_h + x_rest [x_h, x_g]
        let head = self.monomial_times(&rest, g);
        let mut out = self.element_times(&head, last);
        if let Some((c, target)) = structure_constant(last, g) {
            let corr = self.monomial_times(&rest, target);
            out.add_scaled(
                &corr,
                &CenterPoly::constant(Rational::from_integer(c.into())),
            );
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// `[x, y] = sum_k v_k w_k + remainder` with `w_k` in `n` and `v_k`,
/// `remainder` in `U(b-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketDecomposition {
    pub extracted: Vec<(UeaElement, GenIndex)>,
    pub remainder: UeaElement,
}

impl BracketDecomposition {
    pub fn recombine(&self) -> Result<UeaElement> {
        let mut out = self.remainder.clone();
        for (v, w) in &self.extracted {
            out = &out + &v.multiply(&UeaElement::generator(*w)?);
        }
        Ok(out)
    }
}

/// Splits `[x, y]` for `x` in `n` and `y` in `U(b-)` into parts ending in a
/// single `n`-generator and a `U(b-)` remainder.
pub fn bracket_decompose(x: GenIndex, y: &UeaElement) -> Result<BracketDecomposition> {
    x.checked()?;
    if !x.is_positive() {
        return Err(Error::NotPositive(x));
    }
    for lambda in y.terms.keys() {
        if let Some(&bad) = lambda.parts().iter().find(|p| !p.in_borel_minus()) {
            return Err(Error::NotBorelMinus(bad));
        }
    }
    let commutator = UeaElement::generator(x)?.lie_bracket(y);
    let mut extracted: BTreeMap<GenIndex, UeaElement> = BTreeMap::new();
    let mut remainder = UeaElement::zero();
    for (lambda, p) in commutator.terms {
        let split = lambda.parts().partition_point(|g| g.in_borel_minus());
        match lambda.len() - split {
            0 => remainder.add_term(lambda, &p),
            1 => {
                let mut parts = lambda.into_parts();
                let w = parts.pop().expect("one n-factor");
                extracted
                    .entry(w)
                    .or_default()
                    .add_term(Partition::from_sorted_unchecked(parts), &p);
            }
            n => return Err(Error::UnexpectedNilpotentFactors(n)),
        }
    }
    Ok(BracketDecomposition {
        extracted: extracted.into_iter().map(|(w, v)| (v, w)).collect(),
        remainder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, i: i64) -> GenIndex {
        GenIndex::new(a, i)
    }

    fn x(a: i64, i: i64) -> UeaElement {
        UeaElement::generator(g(a, i)).unwrap()
    }

    fn mono(c: i64, parts: &[(i64, i64)]) -> UeaElement {
        UeaElement::monomial(
            CenterPoly::from_int(c),
            Partition::from_sorted(parts.iter().map(|&(a, i)| g(a, i)).collect()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn single_swap() {
        let expected = &mono(1, &[(0, 1), (2, 0)]) - &mono(1, &[(2, 0)]);
        assert_eq!(x(2, 0).multiply(&x(0, 1)), expected);
    }

    #[test]
    fn central_factor_goes_to_coefficient() {
        let expected = UeaElement::monomial(
            CenterPoly::z_power(1),
            Partition::from_sorted(vec![g(0, 1)]).unwrap(),
        )
        .unwrap();
        assert_eq!(x(0, 1).multiply(&x(1, 0)), expected);
        assert_eq!(x(1, 0).multiply(&x(0, 1)), expected);
    }

    #[test]
    fn unit() {
        let u = &x(2, 0).multiply(&x(-1, 3)) + &x(0, 2);
        assert_eq!(UeaElement::one().multiply(&u), u);
        assert_eq!(u.multiply(&UeaElement::one()), u);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(x(2, 0).lie_bracket(&x(0, 1)), mono(-1, &[(2, 0)]));
        let u = &x(3, 1) + &x(-2, 0);
        assert!(u.lie_bracket(&u).is_zero());
        assert!(x(0, 1).lie_bracket(&x(-1, 2)).is_zero());
    }

    #[test]
    fn heights() {
        assert_eq!(mono(1, &[(0, 1), (-1, 2)]).height(), Ok(2));
        assert_eq!(UeaElement::central(CenterPoly::z_power(3)).height(), Ok(0));
        let u = &mono(1, &[(0, 1), (2, 0)]) - &mono(1, &[(2, 0)]);
        assert_eq!(u.height(), Ok(2));
        assert_eq!(UeaElement::zero().height(), Err(Error::ZeroElement));
    }

    #[test]
    fn grading() {
        let u = &x(0, 1) + &x(-1, 0);
        let parts = u.grade_split();
        assert_eq!(parts.len(), 2);
        assert!(parts.contains_key(&QDegree::new(0, 1)));
        assert!(parts.contains_key(&QDegree::new(-1, 0)));
        assert_eq!(u.mindeg(), Ok(QDegree::new(-1, 0)));
        assert_eq!(u.mindeg1(), Ok(-2));

        let v = mono(1, &[(0, 1), (-1, 2)]);
        assert_eq!(v.grade_split().len(), 1);
        assert_eq!(v.mindeg(), Ok(QDegree::new(-1, 2)));
        assert_eq!(v.mindeg1(), Ok(0));

        // z carries degree (1,0) under the star product
        let w = UeaElement::central(CenterPoly::z_power(2));
        assert_eq!(w.mindeg(), Ok(QDegree::new(2, -1)));
    }

    #[test]
    fn decomposition_examples() {
        let d = bracket_decompose(g(2, 0), &x(0, 1)).unwrap();
        assert_eq!(d.extracted, vec![(mono(-1, &[]), g(2, 0))]);
        assert!(d.remainder.is_zero());

        let d = bracket_decompose(g(2, 0), &x(-1, 0)).unwrap();
        assert!(d.extracted.is_empty());
        assert!(d.remainder.is_zero());

        let d = bracket_decompose(g(2, 0), &x(-3, 2)).unwrap();
        assert!(d.extracted.is_empty());
        assert_eq!(d.remainder, mono(-2, &[(-1, 1)]));
    }

    #[test]
    fn decomposition_errors() {
        assert_eq!(
            bracket_decompose(g(0, 1), &x(0, 1)),
            Err(Error::NotPositive(g(0, 1)))
        );
        assert_eq!(
            bracket_decompose(g(2, 0), &x(3, 0)),
            Err(Error::NotBorelMinus(g(3, 0)))
        );
    }

    #[test]
    fn phi_component_examples() {
        let one = Character::constant(Rational::one());
        assert_eq!(x(2, 0).phi_component(&one).unwrap(), UeaElement::one());
        let lower = &mono(3, &[(0, 1), (-1, 2)]) + &x(-4, 0);
        assert_eq!(lower.phi_component(&one).unwrap(), lower);
        assert_eq!(
            mono(1, &[(0, 1), (2, 0)]).phi_component(&one).unwrap(),
            x(0, 1)
        );
        // a+i >= 3 generators evaluate to zero
        assert!(mono(1, &[(0, 1), (3, 0)])
            .phi_component(&one)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn monomial_validation() {
        assert_eq!(
            UeaElement::monomial(
                CenterPoly::one(),
                Partition::from_sorted(vec![g(1, 0)]).unwrap()
            ),
            Err(Error::CentralInMonomial)
        );
        assert!(matches!(
            UeaElement::generator(g(0, -1)),
            Err(Error::NegativeSecondIndex(_))
        ));
    }

    #[test]
    fn word_normalization_matches_products() {
        let word = [g(3, 0), g(-1, 2), g(1, 0), g(0, 1)];
        let direct = UeaElement::from_word(CenterPoly::one(), &word).unwrap();
        let product = word.iter().fold(UeaElement::one(), |acc, &w| {
            acc.multiply(&UeaElement::generator(w).unwrap())
        });
        assert_eq!(direct, product);
    }
}
