//! Seeded random graph corpora for property tests and the verification
//! harness. Everything here is deterministic given the seed.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::reductions;
use crate::Graph;

/// Thin deterministic RNG used across tests and the CLI `verify` command.
pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn seed(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.gen()
    }

    pub fn next_f64(&mut self) -> f64 {
        self.0.gen::<f64>()
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        self.0.gen_range(0..bound)
    }
}

/// G(n, p) with the given edge probability.
pub fn random_graph(rng: &mut Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_f64() < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Rejection-samples a connected G(n, p); the density is re-drawn per
/// attempt so small n still terminates quickly.
pub fn random_connected_graph(rng: &mut Rng, n: usize) -> Graph {
    loop {
        let p = 0.2 + 0.6 * rng.next_f64();
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected and not split (the precondition of the subdivision gadgets).
pub fn random_connected_non_split_graph(rng: &mut Rng, n: usize) -> Graph {
    loop {
        let g = random_connected_graph(rng, n);
        if !reductions::is_split(&g).0 {
            return g;
        }
    }
}

/// A random symmetric matrix with entries in [-scale, scale], row-major.
pub fn random_symmetric(rng: &mut Rng, n: usize, scale: f64) -> crate::spectra::SymMatrix {
    let mut m = crate::spectra::SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let x = (2.0 * rng.next_f64() - 1.0) * scale;
            m.set(i, j, x);
        }
    }
    m
}
