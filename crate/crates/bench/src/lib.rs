//! Inputs for the criterion benches: seeded members from the generator and
//! seeded random graphs.

use p5free_core::generate::{generate, Kind};
use p5free_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` members on `n` vertices, cycling through the generator kinds.
pub fn members(n: usize, count: usize) -> Vec<Graph> {
    (0..count as u64)
        .map(|seed| generate(Kind::ALL[seed as usize % Kind::ALL.len()], n, seed).expect("generator audits").graph)
        .collect()
}

/// `count` graphs on `n` vertices with independent edges of probability `p`.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.set_edge(u, v, rng.gen_bool(p));
                }
            }
            g
        })
        .collect()
}
