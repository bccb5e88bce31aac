#![allow(dead_code)]

use blockalg::{
    CenterPoly, GenIndex, ModuleVector, Partition, Rational, UeaElement, WhittakerModule,
};
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn g(a: i64, i: i64) -> GenIndex {
    GenIndex::new(a, i)
}

/// Non-central generators with `|a| <= a_max`, `0 <= i <= i_max`.
pub fn box_generators(a_max: i64, i_max: i64) -> Vec<GenIndex> {
    let mut out = Vec::new();
    for a in -a_max..=a_max {
        for i in 0..=i_max {
            let x = g(a, i);
            if !x.is_central() {
                out.push(x);
            }
        }
    }
    out
}

pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> CenterPoly {
    loop {
        let deg = rng.gen_range(0..=max_degree);
        let coeffs = (0..=deg)
            .map(|_| Rational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into()))
            .collect();
        let p = CenterPoly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_partition<R: Rng>(rng: &mut R, pool: &[GenIndex], max_len: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    Partition::from_unsorted(
        (0..len)
            .map(|_| pool[rng.gen_range(0..pool.len())])
            .collect(),
    )
}

/// Up to `max_terms` terms, each of height at most `max_height`.
pub fn random_element<R: Rng>(
    rng: &mut R,
    pool: &[GenIndex],
    max_terms: usize,
    max_height: usize,
    max_z_degree: usize,
) -> UeaElement {
    let mut u = UeaElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let lambda = random_partition(rng, pool, max_height);
        let term = UeaElement::monomial(random_poly(rng, max_z_degree), lambda).unwrap();
        u = &u + &term;
    }
    u
}

/// Generators of `b-` with `pi >= pi_min` and `i <= i_max`.
pub fn borel_minus_pool(pi_min: i64, i_max: i64) -> Vec<GenIndex> {
    let mut out = Vec::new();
    for i in 0..=i_max {
        for line in (pi_min + 1)..=1 {
            let x = g(line - i, i);
            if !x.is_central() {
                out.push(x);
            }
        }
    }
    out
}

/// Nonzero vector with at most `max_terms` terms, each with `pi >= pi_min`.
pub fn random_vector<R: Rng>(
    rng: &mut R,
    module: &WhittakerModule,
    pi_min: i64,
    i_max: i64,
    max_terms: usize,
) -> ModuleVector {
    let pool = borel_minus_pool(pi_min, i_max);
    loop {
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=max_terms) {
            let lambda = loop {
                let l = random_partition(rng, &pool, 3);
                if l.pi_degree() >= pi_min {
                    break l;
                }
            };
            terms.push((lambda, random_poly(rng, 1)));
        }
        let v = module.vector(terms).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

/// `u w'` computed one generator at a time from the right.
pub fn act_sequentially(module: &WhittakerModule, u: &UeaElement) -> ModuleVector {
    let mut total = ModuleVector::zero();
    for (lambda, p) in u.terms() {
        let mut v = module.vacuum();
        for &x in lambda.parts().iter().rev() {
            v = module.act(x, &v).unwrap();
        }
        let scaled: Vec<(Partition, CenterPoly)> =
            v.terms().map(|(l, c)| (l.clone(), c * p)).collect();
        total = &total + &module.vector(scaled).unwrap();
    }
    total
}
