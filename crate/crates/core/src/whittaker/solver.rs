//! Truncated search for Whittaker vectors in `L_{phi, (z - c)}`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{GeneratorCutoff, ModuleVector, WhittakerModule};
use crate::error::{Error, Result};
use crate::lie::{GenIndex, Partition};
use crate::linalg::NullspaceTracker;
use crate::poly::CenterPoly;
use crate::Rational;

/// Bounds on the candidate partitions `lambda`: every part has second
/// index at most `part_i_max`, `pi(|lambda|) >= pi_min`, and
/// `len(lambda) <= len_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub pi_min: i64,
    pub part_i_max: i64,
    pub len_max: usize,
}

impl Truncation {
    pub fn new(pi_min: i64, part_i_max: i64, len_max: usize) -> Self {
        Truncation {
            pi_min,
            part_i_max,
            len_max,
        }
    }

    /// Any `x_b` with `pi(b) >= 2 - pi_min` has zero defect on every
    /// candidate, which bounds the useful `a+i` range of a cutoff.
    pub fn sufficient_sum_max(&self) -> i64 {
        2 + (1 - self.pi_min)
    }

    /// Default second-index cutoff `2 * part_i_max * len_max + 4`.
    pub fn default_i_max(&self) -> i64 {
        2 * self.part_i_max * self.len_max as i64 + 4
    }

    fn validate(&self) -> Result<()> {
        if self.pi_min > 0 {
            return Err(Error::InvalidParameter(format!(
                "pi_min must be <= 0, got {}",
                self.pi_min
            )));
        }
        if self.part_i_max < 0 {
            return Err(Error::InvalidParameter(format!(
                "part_i_max must be >= 0, got {}",
                self.part_i_max
            )));
        }
        Ok(())
    }

    /// Generators of `b-` other than `x(1,0)` admitted as parts, ascending.
    pub fn parts(&self) -> Vec<GenIndex> {
        let mut parts: Vec<GenIndex> = (self.pi_min + 1..=1)
            .flat_map(|line| (0..=self.part_i_max).map(move |i| GenIndex::new(line - i, i)))
            .filter(|g| !g.is_central())
            .collect();
        parts.sort();
        parts
    }

    /// All admitted partitions, sorted, starting with the null partition.
    pub fn candidates(&self) -> Result<Vec<Partition>> {
        self.validate()?;
        let parts = self.parts();
        let mut out = Vec::new();
        let mut current = Vec::new();
        enumerate(&parts, 0, 0, self, &mut current, &mut out);
        out.sort();
        Ok(out)
    }
}

fn enumerate(
    parts: &[GenIndex],
    start: usize,
    pi_sum: i64,
    trunc: &Truncation,
    current: &mut Vec<GenIndex>,
    out: &mut Vec<Partition>,
) {
    out.push(Partition::from_sorted_unchecked(current.clone()));
    if current.len() == trunc.len_max {
        return;
    }
    for k in start..parts.len() {
        let next = pi_sum + parts[k].pi();
        if next < trunc.pi_min {
            continue;
        }
        current.push(parts[k]);
        enumerate(parts, k, next, trunc, current, out);
        current.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub candidates: Vec<Partition>,
    pub generators: usize,
    pub constraints: usize,
    /// Kernel basis in reduced echelon form over the candidate order.
    pub basis: Vec<ModuleVector>,
}

impl WhittakerModule {
    /// Basis of the vectors supported on the truncation's candidates whose
    /// defect vanishes for every generator of the cutoff.
    pub fn solve_whittaker(
        &self,
        trunc: &Truncation,
        cutoff: GeneratorCutoff,
    ) -> Result<SolveOutcome> {
        if self.ideal().linear_root().is_none() {
            return Err(Error::NonLinearIdeal);
        }
        let candidates = trunc.candidates()?;
        if candidates.is_empty() {
            return Err(Error::EmptyCandidateSet);
        }
        let generators = cutoff.generators();

        // one block of rows per generator, keyed by output basis monomial
        let blocks: Vec<BTreeMap<Partition, Vec<(usize, Rational)>>> = generators
            .par_iter()
            .map(|&x| {
                let mut rows: BTreeMap<Partition, Vec<(usize, Rational)>> = BTreeMap::new();
                for (col, lambda) in candidates.iter().enumerate() {
                    let basis_vec = ModuleVector::from_single(lambda.clone(), CenterPoly::one());
                    let d = self
                        .defect(x, &basis_vec)
                        .expect("cutoff generators lie in n");
                    for (mu, p) in d.terms() {
                        let v = self
                            .ideal()
                            .residue_scalar(p)
                            .expect("linear ideal has rational residues");
                        rows.entry(mu.clone()).or_default().push((col, v));
                    }
                }
                rows
            })
            .collect();

        let mut tracker = NullspaceTracker::new(candidates.len());
        let mut constraints = 0;
        for block in &blocks {
            for row in block.values() {
                constraints += 1;
                tracker.add_constraint(row);
            }
        }
        let basis = tracker
            .into_basis()
            .into_iter()
            .map(|coords| {
                let terms = candidates
                    .iter()
                    .zip(coords)
                    .map(|(l, c)| (l.clone(), CenterPoly::constant(c)));
                self.vector(terms).expect("candidates lie in b-")
            })
            .collect();
        Ok(SolveOutcome {
            candidates,
            generators: generators.len(),
            constraints,
            basis,
        })
    }
}

impl ModuleVector {
    pub(crate) fn from_single(lambda: Partition, coeff: CenterPoly) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(lambda, &coeff);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::whittaker::{Character, Ideal};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn candidate_enumeration() {
        let t = Truncation::new(0, 2, 2);
        let c = t.candidates().unwrap();
        // parts (0,1), (-1,2) on the pi = 0 line
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], Partition::empty());
        let t = Truncation::new(-1, 1, 1);
        // (0,0), (-1,1), (0,1) plus the null partition
        assert_eq!(t.candidates().unwrap().len(), 4);
    }

    #[test]
    fn null_truncation_gives_vacuum() {
        let m = WhittakerModule::new(Character::Factorial, Ideal::maximal(q(2)));
        let out = m
            .solve_whittaker(&Truncation::new(0, 0, 0), GeneratorCutoff::default())
            .unwrap();
        assert_eq!(out.basis, vec![m.vacuum()]);
    }

    #[test]
    fn rejects_nonlinear_ideal() {
        let m = WhittakerModule::new(Character::Factorial, Ideal::Zero);
        assert_eq!(
            m.solve_whittaker(&Truncation::new(0, 1, 1), GeneratorCutoff::default()),
            Err(Error::NonLinearIdeal)
        );
        let quad = Ideal::principal(CenterPoly::z_power(2)).unwrap();
        let m = WhittakerModule::new(Character::Factorial, quad);
        assert_eq!(
            m.solve_whittaker(&Truncation::new(0, 1, 1), GeneratorCutoff::default()),
            Err(Error::NonLinearIdeal)
        );
    }

    #[test]
    fn rejects_positive_pi_min() {
        assert!(matches!(
            Truncation::new(1, 1, 1).candidates(),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn bounds() {
        let t = Truncation::new(-2, 3, 3);
        assert_eq!(t.sufficient_sum_max(), 5);
        assert_eq!(t.default_i_max(), 22);
    }
}
