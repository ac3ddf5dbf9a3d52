//! Shared helpers for the integration suites: seeded random ideals and
//! families. Each suite uses its own subset.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sdepth::{binomial, k_subsets, MonomialIdeal, VertexSet};

/// A random pure degree-`d` ideal on `[n]` with `mu` distinct generators.
pub fn random_pure_ideal(rng: &mut ChaCha8Rng, n: u32, d: u32, mu: usize) -> MonomialIdeal {
    let all: Vec<VertexSet> = k_subsets(n, d).collect();
    assert!(mu >= 1 && mu <= all.len());
    let mut picked: Vec<VertexSet> = Vec::with_capacity(mu);
    let mut pool = all;
    for _ in 0..mu {
        let i = rng.random_range(0..pool.len());
        picked.push(pool.swap_remove(i));
    }
    MonomialIdeal::new(n, picked).unwrap()
}

/// A random uniform family of `size` distinct `k`-subsets of `[n]`.
pub fn random_family(rng: &mut ChaCha8Rng, n: u32, k: u32, size: usize) -> Vec<VertexSet> {
    let all: Vec<VertexSet> = k_subsets(n, k).collect();
    assert!(size >= 1 && size <= all.len());
    let mut pool = all;
    let mut picked = Vec::with_capacity(size);
    for _ in 0..size {
        let i = rng.random_range(0..pool.len());
        picked.push(pool.swap_remove(i));
    }
    picked
}

/// Random `(n, d, mu)` with `1 <= d < n` and `1 <= mu <= C(n, d)`.
pub fn random_shape(rng: &mut ChaCha8Rng, max_n: u32) -> (u32, u32, usize) {
    let n = rng.random_range(3..=max_n);
    let d = rng.random_range(1..n);
    let total = binomial(n as u64, d as u64).unwrap() as usize;
    let mu = rng.random_range(1..=total);
    (n, d, mu)
}
