//! Generator indices, the ordered group `Q = Z x Z`, the structure constants
//! of the bracket and partitions of generator indices.
//!
//! The bracket is
//!
//! ```text
//! [x(a,i), x(b,j)] = ((b-1) i - (a-1) j) x(a+b, i+j-1)
//! ```
//!
//! and `Q` carries the product `(a,i) * (b,j) = (a+b, i+j-1)` with identity
//! `(0,1)`. Both index types order by `(a+i, i)` lexicographically.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// An element of the ordered group `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QDegree {
    pub a: i64,
    pub i: i64,
}

impl QDegree {
    pub const IDENTITY: QDegree = QDegree { a: 0, i: 1 };

    pub const fn new(a: i64, i: i64) -> Self {
        QDegree { a, i }
    }

    pub fn star(self, other: QDegree) -> QDegree {
        QDegree::new(self.a + other.a, self.i + other.i - 1)
    }

    pub fn inverse(self) -> QDegree {
        QDegree::new(-self.a, 2 - self.i)
    }

    /// `k`-fold star power; `pow(0)` is the identity.
    pub fn pow(self, k: u64) -> QDegree {
        let k = k as i64;
        QDegree::new(k * self.a, k * (self.i - 1) + 1)
    }

    /// `pi(a,i) = a + i - 1`, the order-preserving homomorphism onto `Z`.
    pub fn pi(self) -> i64 {
        self.a + self.i - 1
    }

    pub fn pi1(self) -> i64 {
        self.a
    }

    pub fn pi2(self) -> i64 {
        self.i
    }

    fn order_key(self) -> (i64, i64) {
        (self.a + self.i, self.i)
    }
}

impl Ord for QDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for QDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.i)
    }
}

/// Which summand of `B = n- + h + n` a basis vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subalgebra {
    /// `a + i > 1`
    Positive,
    /// `a + i = 1`, excluding the center
    Cartan,
    /// `a + i < 1`
    Negative,
    /// `(a,i) = (1,0)`; also part of the Cartan summand
    Center,
}

impl Subalgebra {
    pub fn in_cartan(self) -> bool {
        matches!(self, Subalgebra::Cartan | Subalgebra::Center)
    }
}

/// Index `(a,i)` of the basis vector `x(a,i)`.
///
/// A negative second index is representable, since products in `Q` may
/// leave the generator cone, but every operation that treats the index as
/// a generator rejects it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenIndex {
    pub a: i64,
    pub i: i64,
}

impl GenIndex {
    pub const CENTRAL: GenIndex = GenIndex { a: 1, i: 0 };

    pub const fn new(a: i64, i: i64) -> Self {
        GenIndex { a, i }
    }

    /// Like [`GenIndex::new`] but rejects `i < 0`.
    pub fn generator(a: i64, i: i64) -> Result<Self> {
        GenIndex::new(a, i).checked()
    }

    pub fn checked(self) -> Result<Self> {
        if self.i < 0 {
            Err(Error::NegativeSecondIndex(self))
        } else {
            Ok(self)
        }
    }

    pub fn degree(self) -> QDegree {
        QDegree::new(self.a, self.i)
    }

    pub fn pi(self) -> i64 {
        self.degree().pi()
    }

    pub fn line(self) -> i64 {
        self.a + self.i
    }

    pub fn is_central(self) -> bool {
        self == GenIndex::CENTRAL
    }

    pub fn is_positive(self) -> bool {
        self.line() > 1
    }

    /// In `b- = n- + h`, i.e. `a + i <= 1` (includes the center).
    pub fn in_borel_minus(self) -> bool {
        self.line() <= 1
    }

    pub fn classify(self) -> Subalgebra {
        match self.line().cmp(&1) {
            Ordering::Greater => Subalgebra::Positive,
            Ordering::Less => Subalgebra::Negative,
            Ordering::Equal if self.is_central() => Subalgebra::Center,
            Ordering::Equal => Subalgebra::Cartan,
        }
    }

    fn order_key(self) -> (i64, i64) {
        (self.a + self.i, self.i)
    }
}

impl Ord for GenIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for GenIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x({},{})", self.a, self.i)
    }
}

impl From<GenIndex> for QDegree {
    fn from(g: GenIndex) -> QDegree {
        g.degree()
    }
}

/// A single nonzero bracket term `coeff * x(target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTerm {
    pub coeff: BigInt,
    pub target: GenIndex,
}

/// Structure constant of `[x, y]` as a machine integer, `None` when it
/// vanishes. Inputs are assumed to be generators.
pub(crate) fn structure_constant(x: GenIndex, y: GenIndex) -> Option<(i128, GenIndex)> {
    let (a, i) = (x.a as i128, x.i as i128);
    let (b, j) = (y.a as i128, y.i as i128);
    let coeff = (b - 1) * i - (a - 1) * j;
    if coeff == 0 {
        None
    } else {
        Some((coeff, GenIndex::new(x.a + y.a, x.i + y.i - 1)))
    }
}

/// `[x, y]` as a single term, or `None` for zero.
pub fn bracket(x: GenIndex, y: GenIndex) -> Result<Option<BracketTerm>> {
    x.checked()?;
    y.checked()?;
    Ok(structure_constant(x, y).map(|(c, target)| BracketTerm {
        coeff: BigInt::from(c),
        target,
    }))
}

/// A non-decreasing sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<GenIndex>);

impl Partition {
    /// The null partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Accepts `parts` only if already sorted.
    pub fn from_sorted(parts: Vec<GenIndex>) -> Result<Self> {
        if let Some(w) = parts.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::UnsortedPartition { position: w + 1 });
        }
        Ok(Partition(parts))
    }

    pub fn from_unsorted(mut parts: Vec<GenIndex>) -> Self {
        parts.sort();
        Partition(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<GenIndex>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[GenIndex] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<GenIndex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<GenIndex> {
        self.0.last().copied()
    }

    pub fn multiplicity(&self, g: GenIndex) -> usize {
        self.0.iter().filter(|&&p| p == g).count()
    }

    /// `(l_1, ..., l_i)`, for `0 <= i <= len`.
    pub fn prefix(&self, i: usize) -> Result<Partition> {
        self.check_index(i, 0)?;
        Ok(Partition(self.0[..i].to_vec()))
    }

    /// `(l_{j+1}, ..., l_r)`, for `0 <= j <= len`.
    pub fn suffix(&self, j: usize) -> Result<Partition> {
        self.check_index(j, 0)?;
        Ok(Partition(self.0[j..].to_vec()))
    }

    /// Drops the `i`-th part (1-based).
    pub fn remove(&self, i: usize) -> Result<Partition> {
        self.check_index(i, 1)?;
        let mut parts = self.0.clone();
        parts.remove(i - 1);
        Ok(Partition(parts))
    }

    /// Inserts a part keeping the sequence sorted.
    pub fn insert(&self, g: GenIndex) -> Partition {
        let mut parts = self.0.clone();
        let at = parts.partition_point(|&p| p <= g);
        parts.insert(at, g);
        Partition(parts)
    }

    /// Star product of the parts; the null partition has the identity degree.
    pub fn degree(&self) -> QDegree {
        self.0
            .iter()
            .fold(QDegree::IDENTITY, |acc, p| acc.star(p.degree()))
    }

    pub fn pi_degree(&self) -> i64 {
        self.0.iter().map(|p| p.pi()).sum()
    }

    fn check_index(&self, index: usize, min: usize) -> Result<()> {
        if index < min || index > self.0.len() {
            Err(Error::IndexOutOfRange {
                index,
                len: self.0.len(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, i: i64) -> GenIndex {
        GenIndex::new(a, i)
    }

    #[test]
    fn bracket_examples() {
        let t = bracket(g(2, 0), g(0, 1)).unwrap().unwrap();
        assert_eq!(t.coeff, BigInt::from(-1));
        assert_eq!(t.target, g(2, 0));
        for b in -3..4 {
            for j in 0..4 {
                assert_eq!(bracket(g(1, 0), g(b, j)).unwrap(), None);
            }
        }
        assert_eq!(bracket(g(0, 1), g(-1, 2)).unwrap(), None);
    }

    #[test]
    fn bracket_never_targets_negative_index() {
        // i = j = 0 forces a zero coefficient
        for a in -5..6 {
            for b in -5..6 {
                assert_eq!(bracket(g(a, 0), g(b, 0)).unwrap(), None);
            }
        }
    }

    #[test]
    fn bracket_rejects_negative_second_index() {
        assert_eq!(
            bracket(g(0, -1), g(0, 1)),
            Err(Error::NegativeSecondIndex(g(0, -1)))
        );
    }

    #[test]
    fn classification() {
        assert_eq!(g(2, 0).classify(), Subalgebra::Positive);
        assert_eq!(g(1, 0).classify(), Subalgebra::Center);
        assert!(g(1, 0).classify().in_cartan());
        assert_eq!(g(0, 1).classify(), Subalgebra::Cartan);
        assert_eq!(g(-1, 0).classify(), Subalgebra::Negative);
    }

    #[test]
    fn order_examples() {
        assert_eq!(QDegree::new(0, 1).cmp(&QDegree::new(-1, 2)), Ordering::Less);
        assert_eq!(QDegree::new(-3, 2).cmp(&QDegree::new(0, 0)), Ordering::Less);
        assert_eq!(QDegree::new(5, 7).cmp(&QDegree::new(5, 7)), Ordering::Equal);
    }

    #[test]
    fn group_laws() {
        let x = QDegree::new(3, -2);
        assert_eq!(x.star(QDegree::IDENTITY), x);
        assert_eq!(x.star(x.inverse()), QDegree::IDENTITY);
        assert_eq!(x.pow(3), x.star(x).star(x));
        assert_eq!(x.pow(0), QDegree::IDENTITY);
        assert_eq!(QDegree::new(1, 0).pow(4), QDegree::new(4, -3));
    }

    #[test]
    fn partition_operations() {
        let lam = Partition::from_sorted(vec![g(0, 1), g(0, 1), g(-1, 2)]).unwrap();
        assert_eq!(lam.len(), 3);
        assert_eq!(lam.multiplicity(g(0, 1)), 2);
        assert_eq!(lam.remove(2).unwrap().parts(), &[g(0, 1), g(-1, 2)]);
        assert_eq!(lam.degree(), QDegree::new(-1, 2));
        assert_eq!(lam.pi_degree(), 0);
        assert_eq!(lam.prefix(0).unwrap(), Partition::empty());
        assert_eq!(lam.suffix(3).unwrap(), Partition::empty());
        assert_eq!(lam.prefix(2).unwrap().parts(), &[g(0, 1), g(0, 1)]);
        assert_eq!(lam.suffix(1).unwrap().parts(), &[g(0, 1), g(-1, 2)]);

        let null = Partition::empty();
        assert_eq!(null.len(), 0);
        assert_eq!(null.degree(), QDegree::new(0, 1));
        assert_eq!(null.pi_degree(), 0);

        let single = Partition::from_sorted(vec![g(-1, 0)]).unwrap();
        assert_eq!(single.degree(), QDegree::new(-1, 0));
        assert_eq!(single.pi_degree(), -2);
    }

    #[test]
    fn partition_index_errors() {
        let lam = Partition::from_sorted(vec![g(0, 1)]).unwrap();
        assert!(matches!(lam.remove(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(lam.remove(2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(lam.prefix(2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(lam.suffix(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn unsorted_partition_rejected() {
        assert_eq!(
            Partition::from_sorted(vec![g(2, 0), g(0, 1)]),
            Err(Error::UnsortedPartition { position: 1 })
        );
        assert_eq!(
            Partition::from_unsorted(vec![g(2, 0), g(0, 1)]).parts(),
            &[g(0, 1), g(2, 0)]
        );
    }

    #[test]
    fn insert_keeps_order() {
        let lam = Partition::from_sorted(vec![g(-1, 0), g(2, 0)]).unwrap();
        assert_eq!(lam.insert(g(0, 1)).parts(), &[g(-1, 0), g(0, 1), g(2, 0)]);
    }
}
