//! Simple graphs, multigraphs produced by contraction, matchings, and the
//! distance-two conflict relation between edges.
//!
//! Vertex and edge identifiers are dense 0-based integers. Edge ids are the
//! positions in the edge list and stay stable under every read-only
//! operation. All values are immutable after construction.

use crate::error::{Error, Result};

/// Simple undirected graph. No loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    bits: AdjacencyBits,
}

/// Bit matrix used for O(1) adjacency tests.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AdjacencyBits {
    words: usize,
    rows: Vec<u64>,
}

impl AdjacencyBits {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        AdjacencyBits {
            words,
            rows: vec![0; words * n],
        }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adj = vec![Vec::new(); vertex_count];
        let mut bits = AdjacencyBits::new(vertex_count);
        for (id, &(a, b)) in edge_list.iter().enumerate() {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if bits.get(u, v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            bits.set(u, v);
            bits.set(v, u);
            edges.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges,
            adj,
            bits,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, smaller vertex first.
    pub fn endpoints(&self, e: usize) -> Result<(usize, usize)> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::InvalidEdge {
                edge: e,
                edge_count: self.edges.len(),
            })
    }

    /// Neighbors of `v` as `(neighbor, edge id)` pairs, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && u != v && self.bits.get(u, v)
    }

    /// Other endpoint of edge `e` as seen from `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Spanning subgraph on the given edge ids (kept in the given order).
    /// Returns the subgraph and the map from new edge ids to old ones.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut list = Vec::with_capacity(edge_ids.len());
        for &e in edge_ids {
            list.push(self.endpoints(e)?);
        }
        let sub = Graph::new(self.vertex_count, &list)?;
        Ok((sub, edge_ids.to_vec()))
    }

    /// Adjacency view with the same vertex ids, for vertex-coloring engines.
    pub fn simple_view(&self) -> SimpleAdj {
        SimpleAdj {
            n: self.vertex_count,
            adj: self
                .adj
                .iter()
                .map(|list| list.iter().map(|&(w, _)| w).collect())
                .collect(),
        }
    }

    /// Edge view with unit multiplicities, for density checks.
    pub fn weighted_view(&self) -> WeightedEdges {
        WeightedEdges {
            n: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v)| (u, v, 1)).collect(),
        }
    }
}

/// True iff `e` and `f` share an endpoint or some edge is adjacent to both,
/// i.e. the edges are at distance at most two in the line graph.
pub fn edges_conflict(g: &Graph, e: usize, f: usize) -> Result<bool> {
    let (a, b) = g.endpoints(e)?;
    let (c, d) = g.endpoints(f)?;
    if e == f {
        return Err(Error::NotDistinctEdges { edge: e });
    }
    Ok(a == c
        || a == d
        || b == c
        || b == d
        || g.has_edge(a, c)
        || g.has_edge(a, d)
        || g.has_edge(b, c)
        || g.has_edge(b, d))
}

/// Matching: a set of pairwise non-adjacent edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn new(g: &Graph, edge_ids: impl IntoIterator<Item = usize>) -> Result<Matching> {
        let mut edges: Vec<usize> = edge_ids.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let mut seen_at = vec![usize::MAX; g.vertex_count()];
        for &e in &edges {
            let (u, v) = g.endpoints(e)?;
            for w in [u, v] {
                if seen_at[w] != usize::MAX {
                    return Err(Error::NotAMatching {
                        e: seen_at[w],
                        f: e,
                        vertex: w,
                    });
                }
                seen_at[w] = e;
            }
        }
        Ok(Matching { edges })
    }

    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Induced matching: no two member edges conflict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongMatching {
    edges: Vec<usize>,
}

impl StrongMatching {
    pub fn new(g: &Graph, edge_ids: impl IntoIterator<Item = usize>) -> Result<StrongMatching> {
        let mut edges: Vec<usize> = edge_ids.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        for e in &edges {
            g.endpoints(*e)?;
        }
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if edges_conflict(g, e, f)? {
                    return Err(Error::NotAStrongMatching { e, f });
                }
            }
        }
        Ok(StrongMatching { edges })
    }

    pub fn edge_ids(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Where a vertex of a contraction came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    /// An untouched vertex of the source graph.
    Vertex(usize),
    /// The contraction of this matching edge of the source graph.
    Edge(usize),
}

/// Contraction result. May carry multi-edges, never loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<((usize, usize), u64)>,
    origin: Vec<VertexOrigin>,
}

impl Multigraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Distinct endpoint pairs with multiplicities, sorted.
    pub fn weighted_edges(&self) -> &[((usize, usize), u64)] {
        &self.edges
    }

    /// Edge count with multiplicity.
    pub fn weighted_edge_count(&self) -> u64 {
        self.edges.iter().map(|&(_, m)| m).sum()
    }

    /// Distinct adjacent pairs.
    pub fn simple_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn origin(&self) -> &[VertexOrigin] {
        &self.origin
    }

    /// Contracted vertex holding matching edge `e`, if any.
    pub fn vertex_of_contracted_edge(&self, e: usize) -> Option<usize> {
        self.origin
            .iter()
            .position(|o| matches!(o, VertexOrigin::Edge(f) if *f == e))
    }

    /// Underlying simple adjacency (coloring is multiplicity-blind).
    pub fn simple_view(&self) -> SimpleAdj {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &((u, v), _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleAdj {
            n: self.vertex_count,
            adj,
        }
    }

    /// Edge view keeping multiplicities, for density checks.
    pub fn weighted_view(&self) -> WeightedEdges {
        WeightedEdges {
            n: self.vertex_count,
            edges: self.edges.iter().map(|&((u, v), m)| (u, v, m)).collect(),
        }
    }
}

/// Contracts each edge of `m`: the edge is deleted and its end-vertices are
/// identified. Vertices of the contraction are renumbered densely, ordered by
/// their smallest original vertex; the origin map records the source of each.
pub fn contract_matching(g: &Graph, m: &Matching) -> Result<Multigraph> {
    // Re-validate against this graph: a Matching value may have been built
    // for a different host.
    let m = Matching::new(g, m.edge_ids().iter().copied())?;
    let n = g.vertex_count();
    let mut rep = (0..n).collect::<Vec<usize>>();
    let mut edge_of_rep = vec![None; n];
    for &e in m.edge_ids() {
        let (u, v) = g.endpoints(e)?;
        rep[v] = u;
        rep[u] = u;
        edge_of_rep[u] = Some(e);
    }
    let mut new_id = vec![usize::MAX; n];
    let mut origin = Vec::new();
    for v in 0..n {
        if rep[v] == v {
            new_id[v] = origin.len();
            origin.push(match edge_of_rep[v] {
                Some(e) => VertexOrigin::Edge(e),
                None => VertexOrigin::Vertex(v),
            });
        }
    }
    let mut mult: std::collections::BTreeMap<(usize, usize), u64> = std::collections::BTreeMap::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if m.edge_ids().binary_search(&id).is_ok() {
            continue;
        }
        let a = new_id[rep[u]];
        let b = new_id[rep[v]];
        debug_assert_ne!(a, b, "contracting a matching never builds loops");
        let key = (a.min(b), a.max(b));
        *mult.entry(key).or_insert(0) += 1;
    }
    Ok(Multigraph {
        vertex_count: origin.len(),
        edges: mult.into_iter().collect(),
        origin,
    })
}

/// Crossing structure of a 1-planar drawing: unordered pairs of edge ids that
/// cross. Each edge crosses at most one other edge, and paired edges never
/// share an endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Drawing {
    pairs: Vec<(usize, usize)>,
}

impl Drawing {
    pub fn new(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Drawing> {
        let mut normalized: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        normalized.sort_unstable();
        let d = Drawing { pairs: normalized };
        d.validate(g)?;
        Ok(d)
    }

    pub fn empty() -> Drawing {
        Drawing { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Checks the drawing against a host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.edge_count()];
        for &(e, f) in &self.pairs {
            if e == f {
                return Err(Error::NotDistinctEdges { edge: e });
            }
            let (a, b) = g.endpoints(e)?;
            let (c, d) = g.endpoints(f)?;
            for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                if x == y {
                    return Err(Error::CrossingSharesEndpoint { e, f, vertex: x });
                }
            }
            for id in [e, f] {
                if used[id] {
                    return Err(Error::CrossingEdgeReused { edge: id });
                }
                used[id] = true;
            }
        }
        Ok(())
    }

    /// Edge ids involved in some crossing pair.
    pub fn crossing_edges(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.pairs.iter().flat_map(|&(e, f)| [e, f]).collect();
        ids.sort_unstable();
        ids
    }
}

/// Split of a drawn graph into non-crossing and crossing spanning subgraphs.
#[derive(Debug, Clone)]
pub struct DrawingSplit {
    /// Subgraph spanned by edges in no crossing pair.
    pub plain: Graph,
    /// Original edge id of each `plain` edge.
    pub plain_edges: Vec<usize>,
    /// Subgraph spanned by edges in some crossing pair.
    pub crossed: Graph,
    /// Original edge id of each `crossed` edge.
    pub crossed_edges: Vec<usize>,
}

/// Partitions the edges of `g` into the subgraph of non-crossing edges and
/// the subgraph of crossing edges, both on the full vertex set.
pub fn split_by_drawing(g: &Graph, d: &Drawing) -> Result<DrawingSplit> {
    d.validate(g)?;
    let mut crossing = vec![false; g.edge_count()];
    for &(e, f) in d.pairs() {
        crossing[e] = true;
        crossing[f] = true;
    }
    let plain_ids: Vec<usize> = (0..g.edge_count()).filter(|&e| !crossing[e]).collect();
    let crossed_ids: Vec<usize> = (0..g.edge_count()).filter(|&e| crossing[e]).collect();
    let (plain, plain_edges) = g.edge_subgraph(&plain_ids)?;
    let (crossed, crossed_edges) = g.edge_subgraph(&crossed_ids)?;
    Ok(DrawingSplit {
        plain,
        plain_edges,
        crossed,
        crossed_edges,
    })
}

/// Plain adjacency lists shared by vertex-coloring engines. Built from either
/// a [`Graph`] or the underlying simple graph of a [`Multigraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleAdj {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

impl SimpleAdj {
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Edge list with multiplicities shared by the density engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedEdges {
    pub n: usize,
    pub edges: Vec<(usize, usize, u64)>,
}

impl WeightedEdges {
    pub fn weighted_count(&self) -> u64 {
        self.edges.iter().map(|&(_, _, m)| m).sum()
    }

    /// Multiplicity-weighted degrees.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for &(u, v, m) in &self.edges {
            deg[u] += m;
            deg[v] += m;
        }
        deg
    }

    /// Weighted edge count inside a vertex subset.
    pub fn edges_inside(&self, inside: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|&&(u, v, _)| inside[u] && inside[v])
            .map(|&(_, _, m)| m)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::LoopEdge { vertex: 0 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::InvalidVertex { vertex: 2, .. })
        ));
    }

    #[test]
    fn conflict_on_path4() {
        // a-b-c-d: ab and cd conflict through bc.
        let g = path(4);
        assert!(edges_conflict(&g, 0, 2).unwrap());
        assert!(edges_conflict(&g, 0, 1).unwrap());
    }

    #[test]
    fn conflict_absent_on_c6_opposite_edges() {
        let g = cycle(6);
        // Edge 1 = (1,2), edge 4 = (4,5): no edge touches both.
        assert!(!edges_conflict(&g, 1, 4).unwrap());
        assert!(edges_conflict(&g, 1, 3).unwrap());
    }

    #[test]
    fn conflict_everywhere_on_k5() {
        let g = complete(5);
        for e in 0..g.edge_count() {
            for f in e + 1..g.edge_count() {
                assert!(edges_conflict(&g, e, f).unwrap());
            }
        }
    }

    #[test]
    fn conflict_rejects_bad_ids() {
        let g = path(3);
        assert!(edges_conflict(&g, 0, 7).is_err());
        assert!(edges_conflict(&g, 1, 1).is_err());
    }

    #[test]
    fn contract_one_cycle_edge() {
        let g = cycle(4);
        let m = Matching::new(&g, [0]).unwrap();
        let cm = contract_matching(&g, &m).unwrap();
        assert_eq!(cm.vertex_count(), 3);
        assert_eq!(cm.weighted_edge_count(), 3);
        assert!(cm.weighted_edges().iter().all(|&(_, m)| m == 1));
    }

    #[test]
    fn contract_perfect_matching_of_c4() {
        let g = cycle(4);
        let m = Matching::new(&g, [0, 2]).unwrap();
        let cm = contract_matching(&g, &m).unwrap();
        assert_eq!(cm.vertex_count(), 2);
        assert_eq!(cm.weighted_edges(), &[((0, 1), 2)]);
    }

    #[test]
    fn contract_k4_edge() {
        let g = complete(4);
        let m = Matching::new(&g, [0]).unwrap(); // edge (0,1)
        let cm = contract_matching(&g, &m).unwrap();
        assert_eq!(cm.vertex_count(), 3);
        assert_eq!(cm.weighted_edge_count(), 5);
        let mults: Vec<u64> = cm.weighted_edges().iter().map(|&(_, m)| m).collect();
        assert_eq!(mults, vec![2, 2, 1]);
        assert_eq!(cm.vertex_of_contracted_edge(0), Some(0));
    }

    #[test]
    fn contraction_preserves_isolated_vertices() {
        let g = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
        let m = Matching::new(&g, [0]).unwrap();
        let cm = contract_matching(&g, &m).unwrap();
        assert_eq!(cm.vertex_count(), 4);
        assert!(cm
            .origin()
            .iter()
            .any(|o| matches!(o, VertexOrigin::Vertex(4))));
    }

    #[test]
    fn matching_rejects_shared_endpoint() {
        let g = path(3);
        assert!(matches!(
            Matching::new(&g, [0, 1]),
            Err(Error::NotAMatching { vertex: 1, .. })
        ));
    }

    #[test]
    fn strong_matching_rejects_conflicts() {
        let g = path(4);
        assert!(StrongMatching::new(&g, [0, 2]).is_err());
        let g6 = cycle(6);
        assert!(StrongMatching::new(&g6, [1, 4]).is_ok());
    }

    #[test]
    fn split_with_empty_drawing() {
        let g = cycle(5);
        let split = split_by_drawing(&g, &Drawing::empty()).unwrap();
        assert_eq!(split.plain.edge_count(), 5);
        assert_eq!(split.crossed.edge_count(), 0);
        assert_eq!(split.crossed.vertex_count(), 5);
    }

    #[test]
    fn split_cube_plus_one_diagonal_pair() {
        // Cube edges stay in the plain part, the two added diagonals of one
        // face form the crossed part.
        let mut edges = Vec::new();
        for u in 0..8u32 {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    edges.push((u as usize, v as usize));
                }
            }
        }
        let d1 = edges.len();
        edges.push((0, 3));
        let d2 = edges.len();
        edges.push((1, 2));
        let g = Graph::new(8, &edges).unwrap();
        let drawing = Drawing::new(&g, [(d1, d2)]).unwrap();
        let split = split_by_drawing(&g, &drawing).unwrap();
        assert_eq!(split.plain.edge_count(), 12);
        assert_eq!(split.crossed_edges, vec![d1, d2]);
        assert_eq!(split.crossed.vertex_count(), 8);
    }

    #[test]
    fn drawing_rejects_shared_endpoint_and_reuse() {
        let g = complete(4);
        // Edges 0=(0,1) and 1=(0,2) share vertex 0.
        assert!(matches!(
            Drawing::new(&g, [(0, 1)]),
            Err(Error::CrossingSharesEndpoint { vertex: 0, .. })
        ));
        // Edge 0=(0,1) crosses 5=(2,3); reusing 0 in another pair is invalid.
        assert!(matches!(
            Drawing::new(&g, [(0, 5), (0, 3)]),
            Err(Error::CrossingEdgeReused { .. }) | Err(Error::CrossingSharesEndpoint { .. })
        ));
    }
}
