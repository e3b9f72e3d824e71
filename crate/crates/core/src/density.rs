//! Exact maximum average degree, hereditary sparsity certificates, and
//! degeneracy orderings.
//!
//! Everything here is exact: densities are rationals, feasibility tests run
//! on integer-capacity min cuts, and no verdict involves floating point.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flow::selection_max;
use crate::graph::{Graph, WeightedEdges};

/// Exact maximum average degree together with a witness subgraph attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    /// max over subgraphs H of 2|E(H)| / |V(H)|, in lowest terms.
    pub mad: Rational64,
    /// Vertices of one subgraph attaining the maximum.
    pub witness: Vec<usize>,
}

/// Outcome of the hereditary `|E(H)| <= a|V(H)| - b` check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityVerdict {
    pub a: Rational64,
    pub b: Rational64,
    pub min_vertices: usize,
    pub holds: bool,
    /// When `holds` is false: a vertex set with at least `min_vertices`
    /// vertices whose induced subgraph beats the bound.
    pub violator: Option<Vec<usize>>,
}

/// Degeneracy value plus a peeling order certifying it: every vertex has at
/// most `degeneracy` neighbors later in `ordering`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub degeneracy: usize,
    pub ordering: Vec<usize>,
}

/// Default subgraph-size floor for sparsity checks: 1 when `b = 0`, else 3.
/// Single vertices trivially break `0 <= a - b` whenever `b > a`, yet the
/// density arguments only ever need the bound on configurations of three or
/// more vertices.
pub fn default_min_vertices(b: Rational64) -> usize {
    if b.is_zero() {
        1
    } else {
        3
    }
}

/// Exact maximum average degree via binary search on the density with a
/// min-cut feasibility test. Distinct subgraph densities are rationals with
/// denominator at most `n`, so once the search interval is narrower than
/// `1/n^2` the best witness found is exactly the densest subgraph.
pub fn maximum_average_degree(g: &Graph) -> DensityReport {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return DensityReport {
            mad: Rational64::zero(),
            witness: if n > 0 { vec![0] } else { Vec::new() },
        };
    }
    let view = g.weighted_view();
    let scale = (n * n) as i64;
    // density(S) > t/scale  <=>  scale*|E(S)| - t*|S| > 0
    let test = |t: i64| -> Option<Vec<usize>> {
        let (value, set) = selection_max(n, &view.edges, scale, t, &[]);
        (value > 0).then_some(set)
    };
    let mut lo: i64 = 0;
    let mut hi: i64 = (n * n * n) as i64;
    let mut witness = test(0).expect("a graph with an edge has positive density");
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match test(mid) {
            Some(set) => {
                lo = mid;
                witness = set;
            }
            None => hi = mid,
        }
    }
    let inside = {
        let mut mask = vec![false; n];
        for &v in &witness {
            mask[v] = true;
        }
        mask
    };
    let edges_inside = view.edges_inside(&inside) as i64;
    let mad = Rational64::new(2 * edges_inside, witness.len() as i64);
    DensityReport { mad, witness }
}

/// Decides whether every induced subgraph `H` with `|V(H)| >= min_vertices`
/// satisfies `|E(H)| <= a|V(H)| - b`, edges counted with multiplicity.
///
/// Any violating set either has some adjacent pair inside it or violates the
/// bound with no edges at all; the latter only happens when `a*min_vertices`
/// already falls below `b`. For each adjacent pair the selection oracle
/// maximizes `|E(S)| - a|S|` over supersets. Whenever the inclusion-maximal
/// maximizer is still smaller than `min_vertices`, every larger superset
/// scores at least one scaled unit worse, which either settles the question
/// or forces one more vertex into the seed and recurses.
pub fn is_ab_graph(
    view: &WeightedEdges,
    a: Rational64,
    b: Rational64,
    min_vertices: usize,
) -> Result<SparsityVerdict> {
    if a < Rational64::one() {
        return Err(Error::SparsitySlopeTooSmall { a });
    }
    if b < Rational64::zero() {
        return Err(Error::SparsityOffsetNegative { b });
    }
    if min_vertices == 0 {
        return Err(Error::ZeroMinVertices);
    }
    let violator = find_violator(view, a, b, min_vertices);
    debug_assert!(violator
        .as_ref()
        .map(|set| violates(view, a, b, set))
        .unwrap_or(true));
    Ok(SparsityVerdict {
        a,
        b,
        min_vertices,
        holds: violator.is_none(),
        violator,
    })
}

fn violates(view: &WeightedEdges, a: Rational64, b: Rational64, set: &[usize]) -> bool {
    let mut inside = vec![false; view.n];
    for &v in set {
        inside[v] = true;
    }
    let e = Rational64::from_integer(view.edges_inside(&inside) as i64);
    let s = Rational64::from_integer(set.len() as i64);
    e > a * s - b
}

fn find_violator(
    view: &WeightedEdges,
    a: Rational64,
    b: Rational64,
    min_vertices: usize,
) -> Option<Vec<usize>> {
    let n = view.n;
    if n < min_vertices {
        return None;
    }
    // Scaled integers: E(S) > a|S| - b  <=>  gain*E(S) - cost*|S| + off > 0.
    let gain = a.denom() * b.denom();
    let cost = a.numer() * b.denom();
    let off = b.numer() * a.denom();
    let m = min_vertices as i64;
    if off > cost * m {
        // Any min_vertices vertices violate outright.
        return Some((0..min_vertices).collect());
    }
    let mut pairs: Vec<(usize, usize)> = view.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    for (u, v) in pairs {
        if let Some(set) = decide_seed(view, gain, cost, off, min_vertices, &mut vec![u, v]) {
            return Some(set);
        }
    }
    None
}

/// Searches for a violating superset of `forced` with at least
/// `min_vertices` vertices; `forced` is restored before returning.
fn decide_seed(
    view: &WeightedEdges,
    gain: i64,
    cost: i64,
    off: i64,
    min_vertices: usize,
    forced: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let (value, set) = selection_max(view.n, &view.edges, gain, cost, forced);
    if value + off <= 0 {
        return None;
    }
    if set.len() >= min_vertices {
        return Some(set);
    }
    // Sets of the required size are strict non-maximizers here, hence score
    // at most value - 1 in scaled integers.
    if value - 1 + off <= 0 {
        return None;
    }
    for w in 0..view.n {
        if set.contains(&w) {
            continue;
        }
        forced.push(w);
        let hit = decide_seed(view, gain, cost, off, min_vertices, forced);
        forced.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Peeling order: repeatedly removes a vertex of minimum (multiplicity
/// weighted) degree, smallest id on ties. The degeneracy is the largest
/// degree seen at removal time.
pub fn degeneracy_order(view: &WeightedEdges) -> DegeneracyReport {
    let n = view.n;
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for &(u, v, m) in &view.edges {
        adj[u].push((v, m));
        adj[v].push((u, m));
    }
    let mut deg = vec![0u64; n];
    for v in 0..n {
        deg[v] = adj[v].iter().map(|&(_, m)| m).sum();
    }
    let mut queue: std::collections::BTreeSet<(u64, usize)> =
        (0..n).map(|v| (deg[v], v)).collect();
    let mut alive = vec![true; n];
    let mut ordering = Vec::with_capacity(n);
    let mut degeneracy = 0u64;
    while let Some(&(d, v)) = queue.iter().next() {
        queue.remove(&(d, v));
        alive[v] = false;
        degeneracy = degeneracy.max(d);
        ordering.push(v);
        for &(w, m) in &adj[v] {
            if alive[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= m;
                queue.insert((deg[w], w));
            }
        }
    }
    DegeneracyReport {
        degeneracy: degeneracy as usize,
        ordering,
    }
}
