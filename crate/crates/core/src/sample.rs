//! Seeded random elements for the property-style checks inside the suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::{qr, Q};
use crate::ugl::{GlRank, PbwMono, UglElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    let num = rng.random_range(-9..=9i64);
    let den = rng.random_range(1..=4i64);
    qr(if num == 0 { 1 } else { num }, den)
}

/// A random element with at most `terms` monomials of degree <= `max_degree`.
pub fn random_ugl(
    rng: &mut ChaCha8Rng,
    rank: GlRank,
    max_degree: u32,
    terms: usize,
) -> UglElement {
    let mut acc = UglElement::zero(rank);
    for _ in 0..terms {
        let mut mono = PbwMono::one(rank);
        let degree = rng.random_range(0..=max_degree);
        for _ in 0..degree {
            let g = rng.random_range(0..rank.gen_count());
            mono.0[g] += 1;
        }
        acc = acc.add(&UglElement::from_terms(
            rank,
            [(mono, random_rational(rng))],
        ));
    }
    acc
}
