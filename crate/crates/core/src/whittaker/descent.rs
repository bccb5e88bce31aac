//! Descent to a Whittaker vector by repeated nonzero defects.
//!
//! For `x` in `n`, every component of `(x - phi(x)) v` has `pi`-degree at
//! least that of the component of `v` it came from, and the part landing in
//! the lowest degree has strictly smaller height. So the pair
//! `(mindeg1, ell1)` increases in the first slot or, at equal `mindeg1`,
//! decreases in the second. Both are checked at every step.

use super::{GeneratorCutoff, ModuleVector, WhittakerModule};
use crate::error::{Error, Result};
use crate::lie::GenIndex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub generator: GenIndex,
    pub mindeg1: i64,
    pub ell1: usize,
    pub terms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DescentEnd {
    /// All cutoff defects vanish.
    Whittaker(ModuleVector),
    /// `max_steps` defects were taken without reaching a Whittaker vector.
    Exhausted(ModuleVector),
    /// The termination measure failed to improve at `step` (1-based).
    MeasureViolation {
        step: usize,
        before: (i64, usize),
        after: (i64, usize),
        vector: ModuleVector,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport {
    pub start: (i64, usize),
    pub steps: Vec<DescentStep>,
    pub end: DescentEnd,
}

impl DescentReport {
    pub fn whittaker_vector(&self) -> Option<&ModuleVector> {
        match &self.end {
            DescentEnd::Whittaker(v) => Some(v),
            _ => None,
        }
    }
}

fn measure(v: &ModuleVector) -> (i64, usize) {
    (v.mindeg1().expect("nonzero"), v.ell1().expect("nonzero"))
}

fn improves(before: (i64, usize), after: (i64, usize)) -> bool {
    after.0 > before.0 || (after.0 == before.0 && after.1 < before.1)
}

impl WhittakerModule {
    /// Replaces `v` by its first nonzero defect over the cutoff (least
    /// generator in `(a+i, i)` order) until none remains.
    pub fn descent(
        &self,
        v: &ModuleVector,
        cutoff: GeneratorCutoff,
        max_steps: usize,
    ) -> Result<DescentReport> {
        if v.is_zero() {
            return Err(Error::ZeroElement);
        }
        let start = measure(v);
        let mut current = v.clone();
        let mut before = start;
        let mut steps = Vec::new();
        loop {
            let check = self.is_whittaker(&current, cutoff);
            let Some((x, next)) = check.witness else {
                return Ok(DescentReport {
                    start,
                    steps,
                    end: DescentEnd::Whittaker(current),
                });
            };
            if steps.len() == max_steps {
                return Ok(DescentReport {
                    start,
                    steps,
                    end: DescentEnd::Exhausted(current),
                });
            }
            let after = measure(&next);
            steps.push(DescentStep {
                generator: x,
                mindeg1: after.0,
                ell1: after.1,
                terms: next.num_terms(),
            });
            if !improves(before, after) {
                return Ok(DescentReport {
                    start,
                    steps: steps.clone(),
                    end: DescentEnd::MeasureViolation {
                        step: steps.len(),
                        before,
                        after,
                        vector: next,
                    },
                });
            }
            before = after;
            current = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Partition;
    use crate::poly::CenterPoly;
    use crate::whittaker::{Character, Ideal};
    use crate::Rational;

    fn module() -> WhittakerModule {
        WhittakerModule::new(
            Character::Factorial,
            Ideal::maximal(Rational::from_integer(2.into())),
        )
    }

    #[test]
    fn vacuum_is_fixed() {
        let m = module();
        let r = m
            .descent(&m.vacuum(), GeneratorCutoff::default(), 64)
            .unwrap();
        assert!(r.steps.is_empty());
        assert_eq!(r.whittaker_vector(), Some(&m.vacuum()));

        let five = m.vacuum().scale(&Rational::from_integer(5.into()));
        let r = m.descent(&five, GeneratorCutoff::default(), 64).unwrap();
        assert_eq!(r.whittaker_vector(), Some(&five));
    }

    #[test]
    fn single_negative_generator() {
        let m = module();
        let v = m
            .vector([(
                Partition::from_unsorted(vec![GenIndex::new(-1, 0)]),
                CenterPoly::one(),
            )])
            .unwrap();
        let r = m.descent(&v, GeneratorCutoff::new(6, 8), 64).unwrap();
        let w = r.whittaker_vector().expect("reaches a Whittaker vector");
        assert!(w.is_vacuum_multiple());
    }

    #[test]
    fn zero_rejected() {
        let m = module();
        assert_eq!(
            m.descent(&ModuleVector::zero(), GeneratorCutoff::default(), 8),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn exhaustion_is_reported() {
        let m = module();
        let v = m
            .vector([(
                Partition::from_unsorted(vec![GenIndex::new(-1, 0), GenIndex::new(-1, 0)]),
                CenterPoly::one(),
            )])
            .unwrap();
        let r = m.descent(&v, GeneratorCutoff::default(), 0).unwrap();
        assert!(matches!(r.end, DescentEnd::Exhausted(_)));
    }
}
