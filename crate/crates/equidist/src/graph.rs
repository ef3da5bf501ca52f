//! Undirected simple graphs on vertex set `0..n`, BFS distance matrices, and
//! the transforms the rest of the crate is built from.
//!
//! Adjacency is stored as one bitset row per vertex, which keeps the clique
//! solver's candidate-set intersections cheap. Graphs are immutable after
//! construction as far as the public API is concerned: every transform
//! returns a fresh graph.

use crate::{Error, Result};

/// An undirected simple graph (no loops, no multi-edges) on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Insert the edge `{u, v}`. Loops are ignored; duplicates are harmless.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Bitset row of `u`'s neighbourhood.
    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(u);
        (0..self.n).filter(move |&v| row[v / 64] >> (v % 64) & 1 == 1)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let mut it = (0..self.n).map(|u| self.degree(u));
        let k = it.next()?;
        it.all(|d| d == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Complement: `u ~ v` (for `u ≠ v`) exactly when not adjacent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Join `G ∇ H`: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Row sum at `u` (the transmission of `u`).
    pub fn transmission(&self, u: usize) -> u64 {
        self.d[u * self.n..(u + 1) * self.n].iter().map(|&x| x as u64).sum()
    }

    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n).map(|u| self.transmission(u)).collect()
    }

    /// `Some(d)` when every row sums to the same value `d`.
    pub fn transmission_regular(&self) -> Option<u64> {
        let mut it = (0..self.n).map(|u| self.transmission(u));
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }
}

/// BFS-exact distances. Errors on disconnected input: the distance matrix
/// (and everything downstream of it) is undefined there.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParams("empty graph".into()));
    }
    let mut d = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.iter().any(|&x| x == u32::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Exact distance power `G^[#t]`: same vertices, `u ~ v` iff `d(u, v) = t`.
/// For `t > diam(G)` this is the edgeless graph.
pub fn exact_distance_power(g: &Graph, t: u32) -> Result<Graph> {
    let dm = all_pairs_distances(g)?;
    Ok(exact_distance_power_from(&dm, t))
}

/// Same as [`exact_distance_power`] with a precomputed distance matrix.
pub fn exact_distance_power_from(dm: &DistanceMatrix, t: u32) -> Graph {
    let n = dm.n();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if dm.dist(u, v) == t {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Ordinary power `G^t`: `u ~ v` iff `1 ≤ d(u, v) ≤ t`.
pub fn power(g: &Graph, t: u32) -> Result<Graph> {
    let dm = all_pairs_distances(g)?;
    Ok(power_from(&dm, t))
}

pub fn power_from(dm: &DistanceMatrix, t: u32) -> Graph {
    let n = dm.n();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let d = dm.dist(u, v);
            if d >= 1 && d <= t {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// `m` disjoint copies of `g` chained in a line: the anchor (vertex 0) of
/// copy `i` is joined to the anchor of copy `i+1` through a fresh path of
/// `t` internal vertices, so consecutive anchors end up at distance `t + 1`
/// and the whole graph has `m(n + t) − t` vertices.
pub fn chained_copies(g: &Graph, m: usize, t: u32) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParams("need at least one copy".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gn = g.n();
    let t = t as usize;
    let n = m * (gn + t) - t;
    let mut h = Graph::new(n);
    for copy in 0..m {
        let base = copy * gn;
        for (u, v) in g.edges() {
            h.add_edge(base + u, base + v);
        }
    }
    let mut next = m * gn;
    for copy in 0..m.saturating_sub(1) {
        let mut prev = copy * gn; // anchor of this copy
        for _ in 0..t {
            h.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        h.add_edge(prev, (copy + 1) * gn);
    }
    debug_assert_eq!(next, n);
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn basic_adjacency() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn path_distances() {
        // P_3: a–b–c has d(a,c)=2 and diameter 2.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(dm.dist(0, 2), 2);
        assert_eq!(dm.diameter(), 2);
    }

    #[test]
    fn petersen_distances() {
        let g = named::petersen();
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(dm.diameter(), 2);
        // 3 neighbours + 6 at distance 2: transmission 3 + 12 = 15.
        assert_eq!(dm.transmission_regular(), Some(15));
    }

    #[test]
    fn cycle_six_distances() {
        let g = named::cycle(6);
        let dm = all_pairs_distances(&g).unwrap();
        assert_eq!(dm.diameter(), 3);
        assert_eq!(dm.transmission_regular(), Some(9)); // 2(1+2)+3
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(all_pairs_distances(&g).unwrap_err(), Error::Disconnected);
        assert_eq!(exact_distance_power(&g, 1).unwrap_err(), Error::Disconnected);
        assert_eq!(power(&g, 2).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn metric_invariants_on_named_graphs() {
        for g in [named::petersen(), named::cycle(7), named::hypercube(4)] {
            let dm = all_pairs_distances(&g).unwrap();
            let n = g.n();
            for u in 0..n {
                assert_eq!(dm.dist(u, u), 0);
                for v in 0..n {
                    assert_eq!(dm.dist(u, v), dm.dist(v, u));
                    if u != v {
                        assert!(dm.dist(u, v) >= 1);
                    }
                    for w in 0..n {
                        assert!(dm.dist(u, w) <= dm.dist(u, v) + dm.dist(v, w));
                    }
                }
            }
        }
    }

    #[test]
    fn exact_power_t1_is_identity() {
        let g = named::petersen();
        let h = exact_distance_power(&g, 1).unwrap();
        assert_eq!(h, g);
        let p = power(&g, 1).unwrap();
        assert_eq!(p, g);
    }

    #[test]
    fn petersen_square_is_complement() {
        // Diameter-2 graphs: distance-2 pairs are exactly the non-edges.
        let g = named::petersen();
        assert_eq!(exact_distance_power(&g, 2).unwrap(), g.complement());
    }

    #[test]
    fn c5_exact_square_is_pentagram() {
        let g = named::cycle(5);
        let h = exact_distance_power(&g, 2).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.regularity(), Some(2));
        assert!(h.is_connected());
    }

    #[test]
    fn c6_square_is_four_regular() {
        let h = power(&named::cycle(6), 2).unwrap();
        assert_eq!(h.regularity(), Some(4));
    }

    #[test]
    fn power_beyond_diameter_is_complete() {
        let g = named::cycle(6);
        let h = power(&g, 3).unwrap();
        assert_eq!(h.edge_count(), 15);
        let e = exact_distance_power(&g, 4).unwrap();
        assert_eq!(e.edge_count(), 0);
    }

    #[test]
    fn exact_powers_partition_connected_pairs() {
        for g in [named::cycle(7), named::hypercube(3), named::petersen()] {
            let dm = all_pairs_distances(&g).unwrap();
            let diam = dm.diameter();
            let total: usize =
                (1..=diam).map(|t| exact_distance_power_from(&dm, t).edge_count()).sum();
            assert_eq!(total, g.n() * (g.n() - 1) / 2);
            // Union over s ≤ t equals the ordinary power.
            for t in 1..=diam {
                let mut union = Graph::new(g.n());
                for s in 1..=t {
                    for (u, v) in exact_distance_power_from(&dm, s).edges() {
                        union.add_edge(u, v);
                    }
                }
                assert_eq!(union, power_from(&dm, t));
            }
        }
    }

    #[test]
    fn complement_involution() {
        let g = named::petersen();
        assert_eq!(g.complement().complement(), g);
        let kn = named::complete(5);
        assert_eq!(kn.complement().edge_count(), 0);
        // C_5 is self-complementary.
        let c5 = named::cycle(5);
        let cc = c5.complement();
        assert_eq!(cc.regularity(), Some(2));
        assert!(cc.is_connected());
    }

    #[test]
    fn join_counts() {
        let k1 = named::complete(1);
        assert_eq!(k1.join(&k1), named::complete(2));
        let c5 = named::cycle(5);
        let k5 = named::complete(5);
        let j = c5.join(&k5);
        assert_eq!(j.n(), 10);
        assert_eq!(j.edge_count(), 5 + 10 + 25);
        let e2 = Graph::new(2);
        let j2 = e2.join(&e2);
        assert_eq!(j2, named::complete_bipartite(2, 2));
    }

    #[test]
    fn chained_copies_vertex_count() {
        let k3 = named::complete(3);
        assert_eq!(chained_copies(&k3, 1, 3).unwrap(), k3);
        assert_eq!(chained_copies(&k3, 2, 3).unwrap().n(), 9);
        let k2 = named::complete(2);
        let h = chained_copies(&k2, 3, 2).unwrap();
        assert_eq!(h.n(), 10);
        assert!(h.is_connected());
        // Anchors of consecutive copies sit at distance t + 1.
        let dm = all_pairs_distances(&h).unwrap();
        assert_eq!(dm.dist(0, 2), 3);
    }

    #[test]
    fn components_split() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]);
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }
}
