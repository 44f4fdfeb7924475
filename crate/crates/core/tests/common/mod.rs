//! Shared fixtures: a fixed suite of primary monomial ideals with small test
//! polynomials, and a seeded generator of closure-membership instances.

#![allow(dead_code)]

use nubar::rational::rat;
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_slices(gens)
}

pub fn mono(e: &[u32]) -> PolynomialQ {
    PolynomialQ::monomial(rat(1, 1), ExponentVector::new(e.to_vec()))
}

pub fn poly(dim: usize, terms: &[(i64, i64, &[u32])]) -> PolynomialQ {
    PolynomialQ::from_terms(
        dim,
        terms
            .iter()
            .map(|&(p, q, e)| (rat(p, q), ExponentVector::new(e.to_vec()))),
    )
    .unwrap()
}

pub fn ideals_2d() -> Vec<MonomialIdeal> {
    vec![
        ideal(&[&[1, 0], &[0, 1]]),
        ideal(&[&[2, 0], &[0, 2]]),
        ideal(&[&[2, 0], &[0, 3]]),
        ideal(&[&[3, 0], &[0, 2]]),
        ideal(&[&[2, 0], &[1, 1], &[0, 3]]),
        ideal(&[&[3, 0], &[1, 1], &[0, 3]]),
        ideal(&[&[4, 0], &[1, 2], &[0, 5]]),
        ideal(&[&[5, 0], &[0, 4]]),
        ideal(&[&[6, 0], &[0, 5]]),
        ideal(&[&[3, 0], &[2, 1], &[0, 4]]),
        ideal(&[&[4, 0], &[2, 2], &[0, 4]]),
        ideal(&[&[5, 0], &[3, 1], &[1, 3], &[0, 5]]),
        ideal(&[&[6, 0], &[1, 2], &[0, 3]]),
        ideal(&[&[2, 0], &[0, 6]]),
        ideal(&[&[4, 0], &[3, 1], &[0, 6]]),
        ideal(&[&[3, 0], &[1, 1], &[0, 5]]),
        ideal(&[&[6, 0], &[4, 1], &[1, 3], &[0, 6]]),
        ideal(&[&[5, 0], &[2, 2], &[0, 6]]),
    ]
}

pub fn ideals_3d() -> Vec<MonomialIdeal> {
    vec![
        ideal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        ideal(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
        ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 6]]),
        ideal(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]),
        ideal(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
        ideal(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 0]]),
        ideal(&[&[2, 0, 0], &[0, 4, 0], &[0, 0, 5], &[0, 1, 1]]),
        ideal(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2], &[1, 1, 1]]),
        ideal(&[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4], &[1, 1, 1]]),
        ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]),
        ideal(&[&[5, 0, 0], &[0, 5, 0], &[0, 0, 5], &[2, 2, 1]]),
    ]
}

pub fn suite_ideals() -> Vec<MonomialIdeal> {
    let mut all = ideals_2d();
    all.extend(ideals_3d());
    all
}

const COEFFS: [(i64, i64); 6] = [(1, 1), (-1, 1), (2, 1), (1, 2), (-3, 1), (5, 3)];

/// Nonzero exponent vector with entries at most 3 and total degree at most 6.
pub fn random_exponent(rng: &mut ChaCha8Rng, dim: usize) -> ExponentVector {
    loop {
        let e: Vec<u32> = (0..dim).map(|_| rng.random_range(0..=3)).collect();
        let d: u32 = e.iter().sum();
        if d > 0 && d <= 6 {
            return ExponentVector::new(e);
        }
    }
}

pub fn random_poly(rng: &mut ChaCha8Rng, dim: usize, terms: usize) -> PolynomialQ {
    loop {
        let f = PolynomialQ::from_terms(
            dim,
            (0..terms).map(|_| {
                let (p, q) = COEFFS[rng.random_range(0..COEFFS.len())];
                (rat(p, q), random_exponent(rng, dim))
            }),
        )
        .unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// Ten polynomials per ideal: five monomials, three binomials, two trinomials.
pub fn suite_polys(index: usize, dim: usize) -> Vec<PolynomialQ> {
    let mut rng = ChaCha8Rng::seed_from_u64(1000 + index as u64);
    let mut out = Vec::new();
    for terms in [1, 1, 1, 1, 1, 2, 2, 2, 3, 3] {
        out.push(random_poly(&mut rng, dim, terms));
    }
    out
}

/// The 30 suite ideals, each paired with its ten polynomials.
pub fn suite() -> Vec<(MonomialIdeal, Vec<PolynomialQ>)> {
    suite_ideals()
        .into_iter()
        .enumerate()
        .map(|(i, id)| {
            let dim = id.dim();
            (id, suite_polys(i, dim))
        })
        .collect()
}

pub struct Instance {
    pub ideal: MonomialIdeal,
    pub f: PolynomialQ,
    pub p: u64,
    pub q: u64,
}

/// Forty membership instances for `seed`; every third has `p/q = nubar`.
pub fn random_instances(seed: u64) -> Vec<Instance> {
    let ideals = suite_ideals();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..40)
        .map(|i| {
            let ideal = ideals[rng.random_range(0..ideals.len())].clone();
            let terms = rng.random_range(1..=2);
            let f = random_poly(&mut rng, ideal.dim(), terms);
            let (p, q) = if i % 3 == 0 {
                let v = nubar::polyhedra::nubar(&f, &ideal).unwrap().value;
                (to_u64(v.numer()), to_u64(v.denom()))
            } else {
                (rng.random_range(1..=6), rng.random_range(1..=6))
            };
            Instance { ideal, f, p, q }
        })
        .collect()
}

pub fn to_u64(n: &num_bigint::BigInt) -> u64 {
    u64::try_from(n).expect("small nonnegative integer")
}

pub fn ratio(p: u64, q: u64) -> Rational {
    rat(p as i64, q as i64)
}

/// Primary ideal with pure powers in `[1, 6]` and up to two mixed generators.
pub fn random_primary_ideal(rng: &mut ChaCha8Rng, dim: usize) -> MonomialIdeal {
    let mut gens: Vec<ExponentVector> = (0..dim)
        .map(|i| {
            let mut e = vec![0; dim];
            e[i] = rng.random_range(1..=6);
            ExponentVector::new(e)
        })
        .collect();
    for _ in 0..rng.random_range(0..=2) {
        gens.push(random_exponent(rng, dim));
    }
    MonomialIdeal::normalize(dim, gens).unwrap()
}
