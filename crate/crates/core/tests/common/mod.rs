//! Shared builders and independent brute-force oracles for the integration
//! tests. Nothing here calls into the engines it is used to check.

#![allow(dead_code)]

use matchlift_core::{Graph, Matching, SimpleAdj, WeightedEdges};
use num_rational::Rational64;
use rand::Rng;

/// All vertex pairs `u < v` in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Graph on `n` vertices whose edge set is the given bitmask over
/// `vertex_pairs(n)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = vertex_pairs(n);
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::new(n, &edges).expect("mask edges are simple")
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges).expect("random edges are simple")
}

/// Uniformly greedy random matching: shuffled edges, kept when endpoints are
/// still untouched.
pub fn random_matching(rng: &mut impl Rng, g: &Graph) -> Matching {
    let mut ids: Vec<usize> = (0..g.edge_count()).collect();
    for i in (1..ids.len()).rev() {
        ids.swap(i, rng.gen_range(0..=i));
    }
    let mut used = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    for e in ids {
        let (u, v) = g.endpoints(e).unwrap();
        if !used[u] && !used[v] && rng.gen_bool(0.7) {
            used[u] = true;
            used[v] = true;
            chosen.push(e);
        }
    }
    Matching::new(g, chosen).expect("greedy selection is a matching")
}

/// Every matching of `g`, the empty one included.
pub fn all_matchings(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    fn rec(
        g: &Graph,
        from: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for e in from..g.edge_count() {
            let (u, v) = g.endpoints(e).unwrap();
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                current.push(e);
                rec(g, e + 1, current, used, out);
                current.pop();
                used[u] = false;
                used[v] = false;
            }
        }
    }
    rec(g, 0, &mut current, &mut used, &mut out);
    out
}

/// Chromatic number by plain backtracking, nothing shared with the library's
/// branch and bound.
pub fn brute_chromatic(view: &SimpleAdj) -> usize {
    let n = view.n;
    if n == 0 {
        return 0;
    }
    fn feasible(view: &SimpleAdj, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
        if v == view.n {
            return true;
        }
        let cap = k.min(colors[..v].iter().copied().max().map_or(1, |m| m + 2));
        for c in 0..cap {
            if view.adj[v].iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if feasible(view, k, colors, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if feasible(view, k, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

/// Exact maximum average degree by enumerating every nonempty vertex subset.
pub fn brute_mad(g: &Graph) -> Rational64 {
    let n = g.vertex_count();
    assert!(n <= 20, "subset enumeration only");
    if g.edge_count() == 0 {
        return Rational64::from_integer(0);
    }
    let mut best = Rational64::from_integer(0);
    for mask in 1u64..(1 << n) {
        let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let edges = g
            .edges()
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count();
        let density = Rational64::new(2 * edges as i64, mask.count_ones() as i64);
        best = best.max(density);
    }
    best
}

/// Hereditary sparsity by enumerating every subset of size at least
/// `min_vertices`, multiplicities included.
pub fn brute_ab_holds(
    view: &WeightedEdges,
    a: Rational64,
    b: Rational64,
    min_vertices: usize,
) -> bool {
    let n = view.n;
    assert!(n <= 20, "subset enumeration only");
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < min_vertices {
            continue;
        }
        let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let edges = view.edges_inside(&inside);
        if Rational64::from_integer(edges as i64)
            > a * Rational64::from_integer(size as i64) - b
        {
            return false;
        }
    }
    true
}

/// Conflict of two edges read off the line graph: adjacency or a common
/// line-graph neighbor. Independent of `edges_conflict`.
pub fn line_graph_conflict_masks(g: &Graph) -> Vec<u64> {
    let m = g.edge_count();
    assert!(m <= 64);
    let mut adj = vec![0u64; m];
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                adj[e] |= 1 << f;
                adj[f] |= 1 << e;
            }
        }
    }
    adj
}

pub fn petersen() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
    .unwrap()
}

pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8u32 {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u as usize, v as usize));
            }
        }
    }
    Graph::new(8, &edges).unwrap()
}
