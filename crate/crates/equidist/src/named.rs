//! Built-in graph constructors with documented canonical labelings, plus
//! name-based lookup for the CLI and the bundled catalog.
//!
//! Labeling conventions (stable, relied on by golden tests):
//! * parametrized families label vertices in the order their defining
//!   objects are generated (hypercube = binary counting, Johnson = k-subsets
//!   in colexicographic order, generalized Petersen = outer cycle then inner);
//! * LCF-notation graphs are the n-cycle `0..n` plus the notation's chords;
//! * the remaining fixed graphs document their construction inline.

use crate::{Error, Graph, Result};

// ---------------------------------------------------------------------------
// Parametrized families
// ---------------------------------------------------------------------------

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::new(n);
    for u in 0..n {
        g.add_edge(u, (u + 1) % n);
    }
    g
}

pub fn path(n: usize) -> Graph {
    assert!(n >= 1);
    let mut g = Graph::new(n);
    for u in 1..n {
        g.add_edge(u - 1, u);
    }
    g
}

/// Star on `n` vertices: centre 0 joined to `n − 1` leaves.
pub fn star(n: usize) -> Graph {
    assert!(n >= 1);
    let mut g = Graph::new(n);
    for u in 1..n {
        g.add_edge(0, u);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

/// Extended star ES(n, m): a centre with `n − 1` pendant paths of length
/// `m`. Path `p` occupies vertices `p·m .. (p+1)·m` outermost first, and
/// the centre comes last (vertex `(n−1)·m`). Keeping vertex 0 on the
/// periphery matters for `chained_copies`, which attaches at vertex 0:
/// chained extended stars then stay maximally separated.
pub fn extended_star(n: usize, m: usize) -> Graph {
    assert!(n >= 2 && m >= 1, "ES(n, m) needs n ≥ 2 and m ≥ 1");
    let centre = (n - 1) * m;
    let mut g = Graph::new(centre + 1);
    for p in 0..n - 1 {
        let mut prev = centre;
        for j in (0..m).rev() {
            let v = p * m + j;
            g.add_edge(prev, v);
            prev = v;
        }
    }
    g
}

/// Hypercube Q_d with binary-counting labels: `u ~ v` iff `u ^ v` is a
/// power of two.
pub fn hypercube(d: usize) -> Graph {
    assert!(d >= 1 && d <= 20);
    let n = 1usize << d;
    let mut g = Graph::new(n);
    for u in 0..n {
        for b in 0..d {
            let v = u ^ (1 << b);
            if v > u {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    // Colexicographic order: compare from the largest element down.
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Johnson graph J(n, k): vertices are the k-subsets of `{0..n}` in
/// colexicographic order, adjacent when the subsets share `k − 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParams(format!("J({n},{k}) needs 1 <= k < n")));
    }
    let subsets = k_subsets(n, k);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let mut g = Graph::new(masks.len());
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if (masks[i] & masks[j]).count_ones() as usize == k - 1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Generalized Petersen graph GP(n, k): outer cycle `0..n`, inner vertices
/// `n..2n` with `n+i ~ n+((i+k) mod n)`, spokes `i ~ n+i`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParams(format!("GP({n},{k}) needs n ≥ 3, 1 ≤ k < n/2")));
    }
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + k) % n);
        g.add_edge(i, n + i);
    }
    Ok(g)
}

pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for &s in offsets {
            g.add_edge(u, (u + s) % n);
        }
    }
    g
}

/// Cubic graph from LCF notation `[pattern]^repeats`: the `n`-cycle plus the
/// chord `i ~ i + pattern[i mod len]`.
pub fn lcf(pattern: &[i64], repeats: usize) -> Graph {
    let n = pattern.len() * repeats;
    let mut g = cycle(n);
    for i in 0..n {
        let off = pattern[i % pattern.len()].rem_euclid(n as i64) as usize;
        g.add_edge(i, (i + off) % n);
    }
    g
}

// ---------------------------------------------------------------------------
// Fixed named graphs
// ---------------------------------------------------------------------------

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).unwrap()
}

pub fn desargues() -> Graph {
    generalized_petersen(10, 3).unwrap()
}

pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2).unwrap()
}

pub fn mobius_kantor() -> Graph {
    generalized_petersen(8, 3).unwrap()
}

pub fn nauru() -> Graph {
    generalized_petersen(12, 5).unwrap()
}

pub fn durer() -> Graph {
    generalized_petersen(6, 2).unwrap()
}

pub fn heawood() -> Graph {
    lcf(&[5, -5], 7)
}

pub fn pappus() -> Graph {
    lcf(&[5, 7, -7, 7, -7, -5], 3)
}

pub fn frucht() -> Graph {
    lcf(&[-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1)
}

pub fn truncated_tetrahedron() -> Graph {
    lcf(&[2, 6, -2], 4)
}

pub fn mcgee() -> Graph {
    lcf(&[12, 7, -7], 8)
}

pub fn franklin() -> Graph {
    lcf(&[5, -5], 6)
}

pub fn f26a() -> Graph {
    lcf(&[-7, 7], 13)
}

pub fn tutte_coxeter() -> Graph {
    lcf(&[-13, -9, 7, -7, 9, 13], 5)
}

pub fn dyck() -> Graph {
    lcf(&[5, -5, 13, -13], 8)
}

pub fn foster() -> Graph {
    lcf(&[17, -9, 37, -37, 9, -17], 15)
}

pub fn thomsen() -> Graph {
    complete_bipartite(3, 3)
}

pub fn hexahedron() -> Graph {
    hypercube(3)
}

/// Octahedron = K_{2,2,2}: complement of the perfect matching {i, i+3}.
pub fn octahedron() -> Graph {
    let g = complete(6);
    let mut h = Graph::new(6);
    for u in 0..6 {
        for v in (u + 1)..6 {
            if v != u + 3 && g.has_edge(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// Icosahedron: pentagonal antiprism C10(1, 2) plus an apex over the even
/// ring (vertex 10) and one under the odd ring (vertex 11).
pub fn icosahedron() -> Graph {
    let ring = circulant(10, &[1, 2]);
    let mut g = Graph::new(12);
    for (u, v) in ring.edges() {
        g.add_edge(u, v);
    }
    for i in 0..5 {
        g.add_edge(10, 2 * i);
        g.add_edge(11, 2 * i + 1);
    }
    g
}

/// Wagner graph (Möbius ladder on 8 vertices): C8 plus antipodal chords.
pub fn wagner() -> Graph {
    circulant(8, &[1, 4])
}

/// Grötzsch graph: Mycielskian of C5. Cycle 0..4, shadows 5..9
/// (`5+i ~ i±1`), apex 10 joined to every shadow.
pub fn grotzsch() -> Graph {
    let mut g = Graph::new(11);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(10, 5 + i);
    }
    g
}

/// Moser spindle: two rhombi (pairs of unit triangles) sharing vertex 0,
/// with the far tips 3 and 6 joined.
pub fn moser_spindle() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (3, 6),
        ],
    )
}

/// Tietze graph: Petersen with vertex 0 expanded into a triangle. Old
/// vertices 1..9 become 0..8; the triangle is 9, 10, 11 attached to the
/// former neighbours of 0 (old 1, 4, 5).
pub fn tietze() -> Graph {
    let p = petersen();
    let mut g = Graph::new(12);
    for (u, v) in p.edges() {
        if u != 0 {
            g.add_edge(u - 1, v - 1);
        }
    }
    let mut tri = 9;
    for v in p.neighbors(0) {
        g.add_edge(tri, v - 1);
        tri += 1;
    }
    g.add_edge(9, 10);
    g.add_edge(9, 11);
    g.add_edge(10, 11);
    g
}

/// Krackhardt kite (the 10-vertex social-network example).
pub fn krackhardt_kite() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 5),
            (1, 3),
            (1, 4),
            (1, 6),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (3, 6),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 7),
            (7, 8),
            (8, 9),
        ],
    )
}

/// Chvátal graph: 4-regular, triangle-free, 4-chromatic on 12 vertices.
pub fn chvatal() -> Graph {
    Graph::from_edges(
        12,
        &[
            (0, 1),
            (0, 4),
            (0, 6),
            (0, 9),
            (1, 2),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 6),
            (2, 8),
            (3, 4),
            (3, 7),
            (3, 9),
            (4, 5),
            (4, 8),
            (5, 10),
            (5, 11),
            (6, 10),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 10),
            (9, 10),
            (9, 11),
        ],
    )
}

/// Coxeter graph: the 28 triples of {0..6} that are not lines of the Fano
/// plane (lines {i, i+1, i+3} mod 7), in lexicographic order, adjacent when
/// disjoint.
pub fn coxeter() -> Graph {
    let lines: Vec<u32> = (0..7u32).map(|i| 1 << i | 1 << ((i + 1) % 7) | 1 << ((i + 3) % 7)).collect();
    let mut triples: Vec<u32> = Vec::new();
    for a in 0..7u32 {
        for b in (a + 1)..7 {
            for c in (b + 1)..7 {
                let m = 1 << a | 1 << b | 1 << c;
                if !lines.contains(&m) {
                    triples.push(m);
                }
            }
        }
    }
    debug_assert_eq!(triples.len(), 28);
    let mut g = Graph::new(28);
    for i in 0..28 {
        for j in (i + 1)..28 {
            if triples[i] & triples[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Shrikhande graph: Cayley graph of Z4 × Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}; vertex (a, b) is labelled 4a + b.
pub fn shrikhande() -> Graph {
    let mut g = Graph::new(16);
    let diffs = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in diffs {
                let u = 4 * a + b;
                let v = 4 * ((a + da) % 4) + (b + db) % 4;
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Clebsch graph (the 5-regular folded 5-cube): binary 4-tuples, adjacent
/// when they differ in one coordinate or in all four.
pub fn clebsch() -> Graph {
    let mut g = Graph::new(16);
    for u in 0..16usize {
        for v in (u + 1)..16 {
            let w = (u ^ v).count_ones();
            if w == 1 || w == 4 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Holt graph on Z9 × Z3: (x, y) ~ (4x ± 1, y + 1); vertex (x, y) is
/// labelled 9y + x.
pub fn holt() -> Graph {
    let mut g = Graph::new(27);
    for x in 0..9usize {
        for y in 0..3usize {
            let u = 9 * y + x;
            for s in [1, 8] {
                let v = 9 * ((y + 1) % 3) + (4 * x + s) % 9;
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Schläfli graph: the 27 lines of a double six (a_i, b_i, c_ij), adjacent
/// when the lines do **not** meet. Labels: a_i = i, b_i = 6 + i,
/// c_{ij} = 12 + index of (i, j) in lexicographic pair order.
pub fn schlafli() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            pairs.push((i, j));
        }
    }
    let mut meets = Graph::new(27);
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                meets.add_edge(i, 6 + j); // a_i meets b_j for i ≠ j
            }
        }
    }
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for x in [i, j] {
            meets.add_edge(x, 12 + p); // a_x meets c_ij when x ∈ {i, j}
            meets.add_edge(6 + x, 12 + p); // likewise b_x
        }
        for (q, &(k, l)) in pairs.iter().enumerate().skip(p + 1) {
            if i != k && i != l && j != k && j != l {
                meets.add_edge(12 + p, 12 + q); // c_ij meets c_kl when disjoint
            }
        }
    }
    meets.complement()
}

/// Gosset graph: Taylor double of the Schläfli graph. Poles 0 and 1; copy
/// vertices x_i = 2 + i and x'_i = 29 + i for the 27 Schläfli vertices.
pub fn gosset() -> Graph {
    let s = schlafli();
    let mut g = Graph::new(56);
    for i in 0..27 {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 29 + i);
        for j in (i + 1)..27 {
            if s.has_edge(i, j) {
                g.add_edge(2 + i, 2 + j);
                g.add_edge(29 + i, 29 + j);
            } else {
                g.add_edge(2 + i, 29 + j);
                g.add_edge(2 + j, 29 + i);
            }
        }
    }
    g
}

/// Hoffman–Singleton graph: pentagons P_h (vertices 5h + j, j ~ j ± 1) and
/// pentagrams Q_i (vertices 25 + 5i + j, j ~ j ± 2), with P_h j joined to
/// Q_i (h·i + j mod 5).
pub fn hoffman_singleton() -> Graph {
    let mut g = Graph::new(50);
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(5 * h + j, 5 * h + (j + 1) % 5);
            g.add_edge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
            }
        }
    }
    g
}

/// Sylvester graph: the subgraph of Hoffman–Singleton induced on the 36
/// vertices adjacent to neither endpoint of a fixed edge (we use the first
/// edge in label order), relabelled in ascending order.
pub fn sylvester() -> Graph {
    let hs = hoffman_singleton();
    let (u, v) = hs.edges()[0];
    let keep: Vec<usize> = (0..50)
        .filter(|&w| w != u && w != v && !hs.has_edge(u, w) && !hs.has_edge(v, w))
        .collect();
    debug_assert_eq!(keep.len(), 36);
    hs.induced_subgraph(&keep)
}

/// Dejter graph: the 7-cube minus the 16 vertices of the perfect Hamming
/// code (syndrome 0), relabelled in ascending order.
pub fn dejter() -> Graph {
    let q7 = hypercube(7);
    let keep: Vec<usize> = (0..128)
        .filter(|&x| {
            let mut syndrome = 0usize;
            for bit in 0..7 {
                if x >> bit & 1 == 1 {
                    syndrome ^= bit + 1;
                }
            }
            syndrome != 0
        })
        .collect();
    debug_assert_eq!(keep.len(), 112);
    q7.induced_subgraph(&keep)
}

// ---------------------------------------------------------------------------
// PG(2,4) hyperoval machinery: Gewirtz, M22 and Higman–Sims graphs
// ---------------------------------------------------------------------------

mod pg24 {
    /// GF(4) multiplication on {0, 1, 2, 3} with 2 = ω, 3 = ω + 1.
    fn mul(a: u8, b: u8) -> u8 {
        const T: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        T[a as usize][b as usize]
    }

    /// Projective points of PG(2,4) as normalized triples.
    fn points() -> Vec<[u8; 3]> {
        let mut out = Vec::new();
        for x in 0..4u8 {
            for y in 0..4u8 {
                for z in 0..4u8 {
                    if (x, y, z) == (0, 0, 0) {
                        continue;
                    }
                    let lead = if x != 0 { x } else if y != 0 { y } else { z };
                    if lead == 1 {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        debug_assert_eq!(out.len(), 21);
        out
    }

    /// Line bitmasks over the 21 points (lines are also indexed by
    /// normalized triples, via the standard duality).
    pub fn line_masks() -> Vec<u32> {
        let pts = points();
        let mut lines = Vec::new();
        for l in &points() {
            let mut mask = 0u32;
            for (i, p) in pts.iter().enumerate() {
                let dot = mul(l[0], p[0]) ^ mul(l[1], p[1]) ^ mul(l[2], p[2]);
                if dot == 0 {
                    mask |= 1 << i;
                }
            }
            debug_assert_eq!(mask.count_ones(), 5);
            lines.push(mask);
        }
        lines
    }

    /// All 168 hyperovals (6-point sets meeting every line in ≤ 2 points),
    /// as bitmasks in ascending numeric order.
    pub fn hyperovals() -> Vec<u32> {
        let lines = line_masks();
        let mut out = Vec::new();
        // Depth-first over 6-subsets, pruning as soon as a line gets 3 points.
        fn rec(start: usize, mask: u32, count: usize, lines: &[u32], out: &mut Vec<u32>) {
            if count == 6 {
                out.push(mask);
                return;
            }
            for p in start..21 {
                let m2 = mask | 1 << p;
                if lines.iter().all(|&l| (l & m2).count_ones() <= 2) {
                    rec(p + 1, m2, count + 1, lines, out);
                }
            }
        }
        rec(0, 0, 0, &lines, &mut out);
        debug_assert_eq!(out.len(), 168);
        out
    }

    /// One equivalence class of hyperovals (pairs meeting evenly), the one
    /// containing the numerically smallest hyperoval. |class| = 56.
    pub fn hyperoval_class() -> Vec<u32> {
        let all = hyperovals();
        let mut class = vec![all[0]];
        let mut changed = true;
        while changed {
            changed = false;
            for &h in &all {
                if class.contains(&h) {
                    continue;
                }
                if class.iter().any(|&c| (c & h).count_ones() % 2 == 0) {
                    class.push(h);
                    changed = true;
                }
            }
        }
        class.sort_unstable();
        debug_assert_eq!(class.len(), 56);
        class
    }

    /// The 77 blocks of the Witt design S(3, 6, 22) over points 0..21
    /// (PG(2,4) points) plus 21 (the extension point ∞): each line plus ∞,
    /// and one hyperoval class. Returned as 22-bit masks, lines first.
    pub fn witt_22_blocks() -> Vec<u32> {
        let mut blocks: Vec<u32> = line_masks().iter().map(|&l| l | 1 << 21).collect();
        blocks.extend(hyperoval_class());
        debug_assert_eq!(blocks.len(), 77);
        blocks
    }
}

/// Gewirtz (Sims–Gewirtz) graph: one class of 56 hyperovals of PG(2,4),
/// adjacent when disjoint.
pub fn gewirtz() -> Graph {
    let class = pg24::hyperoval_class();
    let mut g = Graph::new(56);
    for i in 0..56 {
        for j in (i + 1)..56 {
            if class[i] & class[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// M22 graph: the 77 blocks of S(3,6,22), adjacent when disjoint.
pub fn m22() -> Graph {
    let blocks = pg24::witt_22_blocks();
    let mut g = Graph::new(77);
    for i in 0..77 {
        for j in (i + 1)..77 {
            if blocks[i] & blocks[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Higman–Sims graph: vertex 0, the 22 Witt points (1..=22), and the 77
/// blocks (23..=99); 0 ~ every point, point ~ blocks containing it, blocks
/// adjacent when disjoint.
pub fn higman_sims() -> Graph {
    let blocks = pg24::witt_22_blocks();
    let mut g = Graph::new(100);
    for p in 0..22 {
        g.add_edge(0, 1 + p);
        for (b, &mask) in blocks.iter().enumerate() {
            if mask >> p & 1 == 1 {
                g.add_edge(1 + p, 23 + b);
            }
        }
    }
    for i in 0..77 {
        for j in (i + 1)..77 {
            if blocks[i] & blocks[j] == 0 {
                g.add_edge(23 + i, 23 + j);
            }
        }
    }
    g
}

/// Brouwer–Haemers graph: GF(81) with x ~ y when x − y is a nonzero fourth
/// power. Field elements are labelled by their coefficient vectors over
/// GF(3) read as base-3 numbers, modulo the first irreducible quartic in
/// lexicographic coefficient order.
pub fn brouwer_haemers() -> Graph {
    type El = [u8; 4];

    fn add(a: El, b: El) -> El {
        [0, 1, 2, 3].map(|i| (a[i as usize] + b[i as usize]) % 3)
    }
    fn neg(a: El) -> El {
        a.map(|x| (3 - x) % 3)
    }
    // Multiply modulo x^4 = r3 x^3 + r2 x^2 + r1 x + r0 (the reduction row).
    fn mul(a: El, b: El, red: &[El; 3]) -> El {
        let mut prod = [0u8; 7];
        for i in 0..4 {
            for j in 0..4 {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % 3;
            }
        }
        for deg in (4..7).rev() {
            let c = prod[deg];
            if c != 0 {
                prod[deg] = 0;
                // red[deg - 4] is x^deg written as a cubic.
                let r = red[deg - 4];
                for i in 0..4 {
                    prod[i] = (prod[i] + c * r[i]) % 3;
                }
            }
        }
        [prod[0], prod[1], prod[2], prod[3]]
    }

    // Find the lexicographically first irreducible monic quartic over GF(3):
    // no roots and not divisible by an irreducible monic quadratic.
    let mut modulus = [0u8; 4]; // x^4 + m3 x^3 + m2 x^2 + m1 x + m0
    'search: for code in 0..81u32 {
        let m = [
            (code % 3) as u8,
            (code / 3 % 3) as u8,
            (code / 9 % 3) as u8,
            (code / 27 % 3) as u8,
        ];
        let eval = |x: u64| -> u64 {
            (x.pow(4) + m[3] as u64 * x.pow(3) + m[2] as u64 * x * x + m[1] as u64 * x + m[0] as u64) % 3
        };
        if (0..3).any(|x| eval(x) == 0) {
            continue;
        }
        // Trial division by every monic quadratic x^2 + bx + c.
        for b in 0..3u8 {
            for c in 0..3u8 {
                // (x^2 + bx + c)(x^2 + dx + e) has coefficients:
                // x^3: b + d, x^2: c + e + bd, x^1: be + cd, x^0: ce.
                for d in 0..3u8 {
                    for e in 0..3u8 {
                        if (b + d) % 3 == m[3]
                            && (c + e + b * d) % 3 == m[2]
                            && (b * e + c * d) % 3 == m[1]
                            && (c * e) % 3 == m[0]
                        {
                            continue 'search;
                        }
                    }
                }
            }
        }
        modulus = m;
        break;
    }
    // Reduction rows for x^4, x^5, x^6: x^4 = -(m3 x^3 + ... + m0).
    let x4 = neg(modulus);
    let shift = |e: El, red: &[El; 3]| mul(e, [0, 1, 0, 0], red);
    let mut red = [x4, [0; 4], [0; 4]];
    red[1] = shift(red[0], &red);
    red[2] = shift(red[1], &red);

    let decode = |v: u32| -> El {
        [(v % 3) as u8, (v / 3 % 3) as u8, (v / 9 % 3) as u8, (v / 27 % 3) as u8]
    };
    let encode = |e: El| -> u32 { e[0] as u32 + 3 * e[1] as u32 + 9 * e[2] as u32 + 27 * e[3] as u32 };

    let mut fourth_powers = [false; 81];
    for v in 1..81u32 {
        let e = decode(v);
        let e2 = mul(e, e, &red);
        let e4 = mul(e2, e2, &red);
        fourth_powers[encode(e4) as usize] = true;
    }

    let mut g = Graph::new(81);
    for u in 0..81u32 {
        for v in (u + 1)..81 {
            let diff = add(decode(u), neg(decode(v)));
            if fourth_powers[encode(diff) as usize] {
                g.add_edge(u as usize, v as usize);
            }
        }
    }
    g
}

// ---------------------------------------------------------------------------
// Name-based lookup
// ---------------------------------------------------------------------------

/// The fixed (non-parametrized) named graphs, in catalog order.
pub fn fixed_named() -> &'static [(&'static str, fn() -> Graph)] {
    &[
        ("petersen", petersen as fn() -> Graph),
        ("heawood", heawood),
        ("thomsen", thomsen),
        ("hexahedron", hexahedron),
        ("octahedron", octahedron),
        ("icosahedron", icosahedron),
        ("dodecahedron", dodecahedron),
        ("desargues", desargues),
        ("pappus", pappus),
        ("mobius_kantor", mobius_kantor),
        ("nauru", nauru),
        ("coxeter", coxeter),
        ("durer", durer),
        ("frucht", frucht),
        ("grotzsch", grotzsch),
        ("wagner", wagner),
        ("truncated_tetrahedron", truncated_tetrahedron),
        ("moser_spindle", moser_spindle),
        ("tietze", tietze),
        ("mcgee", mcgee),
        ("franklin", franklin),
        ("f26a", f26a),
        ("tutte_coxeter", tutte_coxeter),
        ("dyck", dyck),
        ("foster", foster),
        ("krackhardt_kite", krackhardt_kite),
        ("chvatal", chvatal),
        ("shrikhande", shrikhande),
        ("clebsch", clebsch),
        ("holt", holt),
        ("schlafli", schlafli),
        ("gosset", gosset),
        ("hoffman_singleton", hoffman_singleton),
        ("sylvester", sylvester),
        ("gewirtz", gewirtz),
        ("m22", m22),
        ("higman_sims", higman_sims),
        ("brouwer_haemers", brouwer_haemers),
        ("dejter", dejter),
    ]
}

/// The bundled catalog: `data/named/catalog.g6` (one graph per line) with
/// the plain-text name-to-line index `catalog.index`. The lines are the
/// graph6 encodings of the [`fixed_named`] constructors under their
/// documented labelings; `regen_catalog` rebuilds the files and a unit
/// test pins the consistency.
pub const CATALOG_G6: &str = include_str!("../data/named/catalog.g6");
pub const CATALOG_INDEX: &str = include_str!("../data/named/catalog.index");

/// Look a graph up in the bundled graph6 catalog.
pub fn from_catalog(name: &str) -> Result<Graph> {
    for entry in CATALOG_INDEX.lines() {
        let mut parts = entry.split('\t');
        let (Some(key), Some(line)) = (parts.next(), parts.next()) else { continue };
        if key == name {
            let lineno: usize = line
                .parse()
                .map_err(|_| Error::InvalidParams("bad catalog index".into()))?;
            let text = CATALOG_G6
                .lines()
                .nth(lineno - 1)
                .ok_or_else(|| Error::InvalidParams("catalog line out of range".into()))?;
            return crate::graph6::parse_graph6(text);
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

/// Build a graph from a CLI-style name: a fixed name (`petersen`,
/// `moebius-kantor`, ...) or a parametrized one (`k_5`, `c_6`, `p_4`,
/// `s_7`, `q_3`, `k_3_3`, `j_7_3`, `es_5_2`, `gp_10_3`).
pub fn from_name(name: &str) -> Result<Graph> {
    let norm: String = name
        .trim()
        .to_ascii_lowercase()
        .chars()
        .map(|c| if c == '-' || c == ' ' || c == ',' { '_' } else { c })
        .collect();
    let norm = norm.replace("__", "_");

    for (fixed, ctor) in fixed_named() {
        if norm == *fixed {
            return Ok(ctor());
        }
    }
    match norm.as_str() {
        "k33" | "k_3_3" => return Ok(thomsen()),
        "moebius_kantor" => return Ok(mobius_kantor()),
        "sims_gewirtz" => return Ok(gewirtz()),
        "q3" | "cube" => return Ok(hexahedron()),
        _ => {}
    }

    let parts: Vec<&str> = norm.split('_').collect();
    let parse = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::UnknownName(name.to_string()))
    };
    match parts.as_slice() {
        ["k", n] => Ok(complete(parse(n)?)),
        ["c", n] => {
            let n = parse(n)?;
            if n < 3 {
                return Err(Error::InvalidParams("cycle needs n >= 3".into()));
            }
            Ok(cycle(n))
        }
        ["p", n] => Ok(path(parse(n)?)),
        ["s", n] => Ok(star(parse(n)?)),
        ["q", d] => {
            let d = parse(d)?;
            if d == 0 || d > 16 {
                return Err(Error::InvalidParams("hypercube needs 1 <= d <= 16".into()));
            }
            Ok(hypercube(d))
        }
        ["k", a, b] => Ok(complete_bipartite(parse(a)?, parse(b)?)),
        ["j", n, k] => johnson(parse(n)?, parse(k)?),
        ["es", n, m] => {
            let (n, m) = (parse(n)?, parse(m)?);
            if n < 2 || m < 1 {
                return Err(Error::InvalidParams("ES(n, m) needs n >= 2, m >= 1".into()));
            }
            Ok(extended_star(n, m))
        }
        ["gp", n, k] => generalized_petersen(parse(n)?, parse(k)?),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnson_7_3_shape() {
        let g = johnson(7, 3).unwrap();
        assert_eq!(g.n(), 35); // C(7,3)
        assert_eq!(g.regularity(), Some(12)); // k(n-k)
    }

    #[test]
    fn extended_star_counts() {
        let g = extended_star(5, 2);
        assert_eq!(g.n(), 9); // (n-1)m + 1
        assert_eq!(g.degree(8), 4); // centre is the last vertex
        assert_eq!(g.degree(0), 1); // vertex 0 is an outermost leaf
        let dm = crate::graph::all_pairs_distances(&g).unwrap();
        assert_eq!(dm.dist(0, 2), 4); // outermost pair
    }

    #[test]
    fn hexahedron_is_cube() {
        let g = hexahedron();
        assert_eq!(g.n(), 8);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(crate::graph::all_pairs_distances(&g).unwrap().diameter(), 3);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.n(), g.edge_count()), (10, 15));
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn fixed_named_all_connected_simple() {
        for (name, ctor) in fixed_named() {
            let g = ctor();
            assert!(g.is_connected(), "{name} should be connected");
            for u in 0..g.n() {
                assert!(!g.has_edge(u, u), "{name} has a loop");
            }
        }
    }

    #[test]
    fn from_name_parses() {
        assert_eq!(from_name("petersen").unwrap().n(), 10);
        assert_eq!(from_name("Moebius-Kantor").unwrap().n(), 16);
        assert_eq!(from_name("j_7_3").unwrap().n(), 35);
        assert_eq!(from_name("k_3_3").unwrap(), thomsen());
        assert_eq!(from_name("es_5_2").unwrap().n(), 9);
        assert!(from_name("no_such_graph").is_err());
        assert!(from_name("j_3_3").is_err());
    }

    #[test]
    fn strongly_regular_constructions() {
        // (n, k, lambda, mu) checks pin down the designed graphs.
        fn srg_params(g: &Graph) -> (usize, usize, usize, usize) {
            let k = g.regularity().expect("regular");
            let mut lambda = None;
            let mut mu = None;
            for u in 0..g.n() {
                for v in 0..g.n() {
                    if u == v {
                        continue;
                    }
                    let common = (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
                    let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
                    match slot {
                        None => *slot = Some(common),
                        Some(x) => assert_eq!(*x, common, "not strongly regular"),
                    }
                }
            }
            (g.n(), k, lambda.unwrap(), mu.unwrap())
        }
        assert_eq!(srg_params(&shrikhande()), (16, 6, 2, 2));
        assert_eq!(srg_params(&clebsch()), (16, 5, 0, 2));
        assert_eq!(srg_params(&schlafli()), (27, 16, 10, 8));
        assert_eq!(srg_params(&hoffman_singleton()), (50, 7, 0, 1));
        assert_eq!(srg_params(&gewirtz()), (56, 10, 0, 2));
        assert_eq!(srg_params(&m22()), (77, 16, 0, 4));
        assert_eq!(srg_params(&higman_sims()), (100, 22, 0, 6));
        assert_eq!(srg_params(&brouwer_haemers()), (81, 20, 1, 6));
    }

    #[test]
    fn witt_design_is_steiner() {
        // Every 3-subset of the 22 points lies in exactly one block.
        let blocks = super::pg24::witt_22_blocks();
        for a in 0..22u32 {
            for b in (a + 1)..22 {
                for c in (b + 1)..22 {
                    let m = 1 << a | 1 << b | 1 << c;
                    let count = blocks.iter().filter(|&&blk| blk & m == m).count();
                    assert_eq!(count, 1, "triple ({a},{b},{c}) in {count} blocks");
                }
            }
        }
    }

    #[test]
    fn cage_girths() {
        fn girth(g: &Graph) -> usize {
            // BFS from every vertex; shortest cycle through the root.
            let mut best = usize::MAX;
            for s in 0..g.n() {
                let mut dist = vec![usize::MAX; g.n()];
                let mut parent = vec![usize::MAX; g.n()];
                dist[s] = 0;
                let mut q = std::collections::VecDeque::from([s]);
                while let Some(u) = q.pop_front() {
                    for v in g.neighbors(u) {
                        if dist[v] == usize::MAX {
                            dist[v] = dist[u] + 1;
                            parent[v] = u;
                            q.push_back(v);
                        } else if parent[u] != v {
                            best = best.min(dist[u] + dist[v] + 1);
                        }
                    }
                }
            }
            best
        }
        assert_eq!(girth(&heawood()), 6);
        assert_eq!(girth(&mcgee()), 7);
        assert_eq!(girth(&tutte_coxeter()), 8);
        assert_eq!(girth(&coxeter()), 7);
        assert_eq!(girth(&pappus()), 6);
        assert_eq!(girth(&foster()), 10);
        assert_eq!(girth(&holt()), 5);
        assert_eq!(girth(&dyck()), 6);
    }

    #[test]
    fn dejter_shape() {
        let g = dejter();
        assert_eq!(g.n(), 112);
        assert_eq!(g.regularity(), Some(6));
        assert!(g.is_connected());
    }

    #[test]
    fn catalog_matches_constructors() {
        for (name, ctor) in fixed_named() {
            let from_file = from_catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(from_file, ctor(), "catalog drift for {name}");
        }
        assert!(from_catalog("no_such").is_err());
    }
}
