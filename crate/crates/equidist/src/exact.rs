//! Exact (exponential-time, desk-scale) computation of the clique number,
//! t-independence numbers and equidistant numbers, with witnesses.
//!
//! One solver drives everything: branch-and-bound maximum clique with a
//! greedy-colouring upper bound (the usual Tomita-style pruning, on bitset
//! candidate rows). Independence numbers go through the complement, the
//! equidistant numbers through the exact distance powers.

use crate::graph::{all_pairs_distances, exact_distance_power_from, power_from};
use crate::spectra;
use crate::{Error, Graph, Result};

/// Default branch-node budget; large enough for every graph this crate
/// ships, small enough to fail fast on adversarial input.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub node_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// An exactly computed parameter value together with a certifying vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// `eq(G)` additionally records a maximizing t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub best_t: u32,
}

struct Searcher<'a> {
    g: &'a Graph,
    words: usize,
    budget: u64,
    nodes: u64,
    best: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        Searcher { g, words: g.words(), budget, nodes: 0, best: Vec::new() }
    }

    /// Greedy colouring of the candidate set; returns vertices ordered so
    /// that colour bounds are non-decreasing, paired with their bound.
    fn colour(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut ordered = Vec::new();
        let mut uncoloured = cand.to_vec();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut class = uncoloured.clone();
            loop {
                // Lowest vertex still available for this colour class.
                let Some(v) = first_bit(&class) else { break };
                clear_bit(&mut uncoloured, v);
                clear_bit(&mut class, v);
                and_not_row(&mut class, self.g.row(v));
                ordered.push((v, colour));
            }
        }
        ordered
    }

    fn expand(&mut self, clique: &mut Vec<usize>, cand: &[u64]) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.nodes));
        }
        let order = self.colour(cand);
        if clique.len() + order.last().map_or(0, |x| x.1) <= self.best.len() {
            return Ok(());
        }
        let mut cand = cand.to_vec();
        for &(v, bound) in order.iter().rev() {
            if clique.len() + bound <= self.best.len() {
                return Ok(());
            }
            clique.push(v);
            let mut next = cand.clone();
            and_row(&mut next, self.g.row(v));
            if next.iter().all(|&w| w == 0) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, &next)?;
            }
            clique.pop();
            clear_bit(&mut cand, v);
        }
        Ok(())
    }
}

#[inline]
fn first_bit(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

#[inline]
fn clear_bit(row: &mut [u64], v: usize) {
    row[v / 64] &= !(1 << (v % 64));
}

#[inline]
fn and_row(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

#[inline]
fn and_not_row(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

/// Exact maximum clique with witness.
pub fn max_clique(g: &Graph, opts: &SolveOptions) -> Result<ExactResult> {
    if g.n() == 0 {
        return Ok(ExactResult { value: 0, witness: Vec::new() });
    }
    let mut s = Searcher::new(g, opts.node_budget);
    let mut all = vec![0u64; s.words];
    for v in 0..g.n() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut clique = Vec::new();
    s.expand(&mut clique, &all)?;
    let mut witness = s.best;
    if witness.is_empty() {
        witness = vec![0]; // single vertex is always a clique on n >= 1
    }
    witness.sort_unstable();
    Ok(ExactResult { value: witness.len(), witness })
}

/// `eq_t(G) = ω(G^[#t])`: largest set with all pairwise distances exactly t.
pub fn eq_t(g: &Graph, t: u32, opts: &SolveOptions) -> Result<ExactResult> {
    let dm = all_pairs_distances(g)?;
    max_clique(&exact_distance_power_from(&dm, t), opts)
}

/// `α_t(G)`: largest set with all pairwise distances greater than t.
/// Computed as a clique in the complement of the ordinary power.
pub fn alpha_t(g: &Graph, t: u32, opts: &SolveOptions) -> Result<ExactResult> {
    let dm = all_pairs_distances(g)?;
    max_clique(&power_from(&dm, t).complement(), opts)
}

/// `eq(G) = max { eq_t(G) : 1 ≤ t ≤ diam(G) }`, with the maximizing t.
///
/// When `use_range_reduction` is set, scanning stops at the first t whose
/// exact value meets the distance-spectrum bound `|{i : λ̃_i ≤ −t}| + 1`:
/// no larger t can beat it.
pub fn eq(g: &Graph, opts: &SolveOptions, use_range_reduction: bool) -> Result<EqResult> {
    let dm = all_pairs_distances(g)?;
    let diam = dm.diameter();
    let spectrum = if use_range_reduction {
        Some(spectra::eigenvalues(&spectra::distance_sym(&dm))?)
    } else {
        None
    };
    let mut best = EqResult { value: 0, witness: Vec::new(), best_t: 1 };
    for t in 1..=diam.max(1) {
        let r = max_clique(&exact_distance_power_from(&dm, t), opts)?;
        if r.value > best.value {
            best = EqResult { value: r.value, witness: r.witness, best_t: t };
        }
        if let Some(s) = &spectrum {
            if r.value == s.count_at_most(-(t as f64)) + 1 {
                break;
            }
        }
    }
    Ok(best)
}

/// One line of a gap report: `α_{t−1}` vs `eq_t` on a single graph.
#[derive(Clone, Debug)]
pub struct GapEntry {
    pub alpha: Result<usize>,
    pub eq: Result<usize>,
}

impl GapEntry {
    pub fn gap(&self) -> Option<i64> {
        match (&self.alpha, &self.eq) {
            (Ok(a), Ok(e)) => Some(*a as i64 - *e as i64),
            _ => None,
        }
    }
}

/// Evaluate `α_{t−1} − eq_t` over a stream of graphs (t ≥ 2); per-graph
/// failures are recorded and the stream continues.
pub fn gap_report(graphs: &[Graph], t: u32, opts: &SolveOptions) -> Vec<GapEntry> {
    assert!(t >= 2, "gap report needs t >= 2");
    graphs
        .iter()
        .map(|g| GapEntry {
            alpha: alpha_t(g, t - 1, opts).map(|r| r.value),
            eq: eq_t(g, t, opts).map(|r| r.value),
        })
        .collect()
}

/// Re-check a witness against its defining pairwise predicate.
pub fn witness_is_equidistant(g: &Graph, witness: &[usize], t: u32) -> bool {
    let Ok(dm) = all_pairs_distances(g) else { return false };
    witness
        .iter()
        .enumerate()
        .all(|(i, &u)| witness[i + 1..].iter().all(|&v| dm.dist(u, v) == t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{corpus, named};

    fn opts() -> SolveOptions {
        SolveOptions::default()
    }

    /// Reference oracle: enumerate all vertex subsets (n ≤ ~20).
    fn brute_clique(g: &Graph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() <= best {
                continue;
            }
            let ok = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if ok {
                best = verts.len();
            }
        }
        best
    }

    #[test]
    fn clique_on_small_named() {
        assert_eq!(max_clique(&named::complete(5), &opts()).unwrap().value, 5);
        // Petersen is triangle-free.
        assert_eq!(max_clique(&named::petersen(), &opts()).unwrap().value, 2);
        let joined = named::cycle(5).join(&named::complete(5));
        assert_eq!(max_clique(&joined, &opts()).unwrap().value, 7);
    }

    #[test]
    fn clique_matches_brute_force() {
        let mut rng = corpus::Rng::seed(99);
        for _ in 0..40 {
            let n = 3 + rng.below(10);
            let g = corpus::random_graph(&mut rng, n, 0.5);
            let r = max_clique(&g, &opts()).unwrap();
            assert_eq!(r.value, brute_clique(&g));
            // Witness really is a clique.
            for (i, &u) in r.witness.iter().enumerate() {
                for &v in &r.witness[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn eq_t_examples() {
        assert_eq!(eq_t(&named::petersen(), 2, &opts()).unwrap().value, 4);
        assert_eq!(eq_t(&named::heawood(), 2, &opts()).unwrap().value, 7);
        // eq_k(J(n,k)) = floor(n/k).
        assert_eq!(eq_t(&named::johnson(7, 3).unwrap(), 3, &opts()).unwrap().value, 2);
        // t beyond the diameter leaves singletons only.
        assert_eq!(eq_t(&named::petersen(), 5, &opts()).unwrap().value, 1);
    }

    #[test]
    fn alpha_t_examples() {
        assert_eq!(alpha_t(&named::petersen(), 1, &opts()).unwrap().value, 4);
        assert_eq!(alpha_t(&named::petersen(), 2, &opts()).unwrap().value, 1);
        // ES(6,2): the 5 outermost vertices sit pairwise at distance 4 > 3.
        assert_eq!(alpha_t(&named::extended_star(6, 2), 3, &opts()).unwrap().value, 5);
    }

    #[test]
    fn eq_examples() {
        assert_eq!(eq(&named::petersen(), &opts(), true).unwrap().value, 4);
        assert_eq!(eq(&named::heawood(), &opts(), true).unwrap().value, 7);
        let r = eq(&named::complete(6), &opts(), true).unwrap();
        assert_eq!((r.value, r.best_t), (6, 1));
    }

    #[test]
    fn eq_range_reduction_agrees() {
        let mut rng = corpus::Rng::seed(4242);
        for _ in 0..30 {
            let n = 4 + rng.below(6);
            let g = corpus::random_connected_graph(&mut rng, n);
            let with = eq(&g, &opts(), true).unwrap();
            let without = eq(&g, &opts(), false).unwrap();
            assert_eq!(with.value, without.value);
        }
        for g in [named::petersen(), named::heawood(), named::hexahedron()] {
            assert_eq!(
                eq(&g, &opts(), true).unwrap().value,
                eq(&g, &opts(), false).unwrap().value
            );
        }
    }

    #[test]
    fn witnesses_check_out() {
        let g = named::heawood();
        let r = eq_t(&g, 2, &opts()).unwrap();
        assert!(witness_is_equidistant(&g, &r.witness, 2));
    }

    #[test]
    fn budget_is_respected() {
        let g = named::johnson(9, 4).unwrap().complement();
        let tiny = SolveOptions { node_budget: 10 };
        match max_clique(&g, &tiny) {
            Err(Error::BudgetExceeded(_)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn gap_report_examples() {
        // Oracle-first: brute force gives alpha_3 = 5 and eq_4 = 5 on
        // ES(6,2) (the five outermost vertices are pairwise at distance
        // exactly 4), so the gap is 0.
        let entries = gap_report(&[named::extended_star(6, 2)], 4, &opts());
        assert_eq!(entries[0].alpha.clone().unwrap(), 5);
        assert_eq!(entries[0].eq.clone().unwrap(), 5);
        assert_eq!(entries[0].gap(), Some(0));

        let entries = gap_report(&[named::complete(5)], 2, &opts());
        assert_eq!(entries[0].gap(), Some(0)); // 1 - 1

        // Chained extended stars: alpha_3 grows by 3 per copy, eq_4 stays 3.
        let base = named::extended_star(4, 2);
        let chained = crate::graph::chained_copies(&base, 3, 4).unwrap();
        let entries = gap_report(&[chained], 4, &opts());
        assert_eq!(entries[0].alpha.clone().unwrap(), 9);
        assert_eq!(entries[0].eq.clone().unwrap(), 3);
        assert_eq!(entries[0].gap(), Some(6));
    }
}
