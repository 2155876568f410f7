#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use semilattice_laplace::stone::{BaseSet, PointMeasure, StoneModel};
use semilattice_laplace::{
    union_closure, GroundSet, Rational, Scalar, SetFamily, Subset, WeightFn,
};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Signed rational with a small denominator.
pub fn rational(rng: &mut StdRng) -> Rational {
    let p: i64 = rng.gen_range(-50..=50);
    let d: i64 = rng.gen_range(1..=12);
    Rational::new(BigInt::from(p), BigInt::from(d))
}

/// Non-negative rational, zero about a fifth of the time.
pub fn nonneg_rational(rng: &mut StdRng) -> Rational {
    if rng.gen_ratio(1, 5) {
        return q(0);
    }
    let p: i64 = rng.gen_range(1..=40);
    let d: i64 = rng.gen_range(1..=9);
    Rational::new(BigInt::from(p), BigInt::from(d))
}

pub fn random_subset(rng: &mut StdRng, ground: &GroundSet) -> Subset {
    Subset::from_mask(rng.gen::<u64>() & ground.full().mask())
}

pub fn random_nonempty(rng: &mut StdRng, ground: &GroundSet) -> Subset {
    assert!(ground.size() > 0);
    loop {
        let s = random_subset(rng, ground);
        if !s.is_empty() {
            return s;
        }
    }
}

/// Union closure of up to `max_seeds` random seeds.
pub fn random_family(rng: &mut StdRng, ground: &GroundSet, max_seeds: usize) -> SetFamily {
    let count = rng.gen_range(0..=max_seeds);
    let seeds: Vec<Subset> = (0..count).map(|_| random_subset(rng, ground)).collect();
    union_closure(ground, &seeds).unwrap()
}

pub fn random_weights(rng: &mut StdRng, family: &SetFamily) -> WeightFn<Rational> {
    let values = family.members().iter().map(|_| rational(rng)).collect();
    WeightFn::from_values(family.clone(), values).unwrap()
}

pub fn random_measure(rng: &mut StdRng, model: &StoneModel) -> PointMeasure<Rational> {
    let weights: Vec<(Subset, Rational)> = model
        .family()
        .members()
        .iter()
        .map(|&m| (m, nonneg_rational(rng)))
        .collect();
    PointMeasure::new(model, weights).unwrap()
}

/// Base set with `n` random non-empty hit sets.
pub fn random_base(rng: &mut StdRng, ground: &GroundSet, n: usize) -> BaseSet {
    let exclude = random_subset(rng, ground);
    let hits = (0..n).map(|_| random_nonempty(rng, ground)).collect();
    BaseSet::new(exclude, hits).unwrap()
}

pub fn random_f64(rng: &mut StdRng) -> f64 {
    rng.gen_range(-1.0..1.0)
}

pub fn sum_weights(mu: &PointMeasure<Rational>, members: &[Subset]) -> Rational {
    members.iter().fold(q(0), |acc, &a| acc + mu.weight(a))
}
