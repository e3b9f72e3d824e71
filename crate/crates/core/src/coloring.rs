//! Proper coloring engines: degeneracy greedy and exact branch-and-bound for
//! vertices, fan/Kempe-chain insertion for edges, alternating-path insertion
//! for bipartite edge coloring, and a targeted k-edge-coloring search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, SimpleAdj};

/// Proper vertex coloring with 0-based color indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub color_count: usize,
}

/// Proper edge coloring with 0-based color indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub color_count: usize,
}

impl EdgeColoring {
    /// Color classes as lists of edge ids; each class is a matching.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count];
        for (e, &c) in self.colors.iter().enumerate() {
            classes[c].push(e);
        }
        classes
    }
}

/// Outcome of a bounded exact search. Exhaustion is an answer in its own
/// right, never an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Impossible,
    Exhausted,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

/// Greedy coloring along the reverse of `order`: the last vertex of `order`
/// is colored first, each vertex getting the smallest color absent from its
/// already-colored neighbors. Fed a peeling order from
/// [`crate::density::degeneracy_order`], this uses at most degeneracy + 1
/// colors.
pub fn greedy_vertex_color(view: &SimpleAdj, order: &[usize]) -> Result<VertexColoring> {
    let n = view.n;
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut used = vec![false; view.degree(v) + 1];
        for &w in &view.adj[v] {
            let c = colors[w];
            if c != usize::MAX && c < used.len() {
                used[c] = true;
            }
        }
        colors[v] = used.iter().position(|&u| !u).expect("a free color exists");
    }
    let color_count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(VertexColoring {
        colors,
        color_count,
    })
}

struct ChromaticSearch<'a> {
    view: &'a SimpleAdj,
    budget: usize,
    node_limit: u64,
    nodes: u64,
    colors: Vec<usize>,
    // Per vertex, bitset over colors seen on neighbors plus the count of
    // distinct ones (the saturation degree).
    neighbor_colors: Vec<Vec<u64>>,
    saturation: Vec<usize>,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> ChromaticSearch<'a> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for &w in &self.view.adj[v] {
            let slot = &mut self.neighbor_colors[w][c / 64];
            if *slot >> (c % 64) & 1 == 0 {
                *slot |= 1 << (c % 64);
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = UNCOLORED;
        for &w in &self.view.adj[v] {
            let still = self.view.adj[w]
                .iter()
                .any(|&x| x != v && self.colors[x] == c);
            if !still {
                self.neighbor_colors[w][c / 64] &= !(1 << (c % 64));
                self.saturation[w] -= 1;
            }
        }
    }

    fn blocked(&self, v: usize, c: usize) -> bool {
        self.neighbor_colors[v][c / 64] >> (c % 64) & 1 == 1
    }

    /// None: node budget exhausted. Some(true): coloring completed.
    fn dive(&mut self, colored: usize, max_used: usize) -> Option<bool> {
        if colored == self.view.n {
            return Some(true);
        }
        let v = (0..self.view.n)
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.view.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let cap = self.budget.min(max_used + 2);
        for c in 0..cap {
            if self.blocked(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return None;
            }
            self.assign(v, c);
            match self.dive(colored + 1, max_used.max(c)) {
                Some(true) => return Some(true),
                Some(false) => self.unassign(v, c),
                None => return None,
            }
        }
        Some(false)
    }
}

/// Exact `color_budget`-coloring by branch and bound: saturation-first vertex
/// selection with a greedy clique seed for the lower bound and symmetry
/// breaking. Stops after `node_limit` assignments.
pub fn exact_chromatic(
    view: &SimpleAdj,
    color_budget: usize,
    node_limit: u64,
) -> Result<Search<VertexColoring>> {
    if color_budget == 0 {
        return Err(Error::ZeroColorBudget);
    }
    let n = view.n;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(view.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| view.are_adjacent(u, v)) {
            clique.push(v);
        }
    }
    if clique.len() > color_budget {
        return Ok(Search::Impossible);
    }
    let words = color_budget.div_ceil(64);
    let mut search = ChromaticSearch {
        view,
        budget: color_budget,
        node_limit,
        nodes: 0,
        colors: vec![UNCOLORED; n],
        neighbor_colors: vec![vec![0u64; words]; n],
        saturation: vec![0; n],
    };
    for (c, &v) in clique.iter().enumerate() {
        search.assign(v, c);
    }
    let max_used = clique.len().saturating_sub(1);
    match search.dive(clique.len(), max_used) {
        Some(true) => {
            let colors = search.colors;
            let color_count = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
            Ok(Search::Found(VertexColoring {
                colors,
                color_count,
            }))
        }
        Some(false) => Ok(Search::Impossible),
        None => Ok(Search::Exhausted),
    }
}

/// Per-vertex table of which edge holds each color.
struct ColorTables {
    at: Vec<Vec<Option<usize>>>,
}

impl ColorTables {
    fn new(n: usize, palette: usize) -> Self {
        ColorTables {
            at: vec![vec![None; palette]; n],
        }
    }

    fn free(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(Option::is_none)
            .expect("palette exceeds every degree")
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn set(&mut self, g: &Graph, e: usize, c: usize, colors: &mut [Option<usize>]) {
        let (u, v) = g.endpoints(e).expect("edge id is valid");
        debug_assert!(self.at[u][c].is_none() && self.at[v][c].is_none());
        self.at[u][c] = Some(e);
        self.at[v][c] = Some(e);
        colors[e] = Some(c);
    }

    fn clear(&mut self, g: &Graph, e: usize, colors: &mut [Option<usize>]) {
        if let Some(c) = colors[e] {
            let (u, v) = g.endpoints(e).expect("edge id is valid");
            self.at[u][c] = None;
            self.at[v][c] = None;
            colors[e] = None;
        }
    }
}

/// Proper edge coloring with at most `max_degree + 1` colors, built by fan
/// rotation and Kempe-chain inversion, inserting edges in increasing id
/// order with smallest-color tie breaks throughout.
pub fn vizing_edge_color(g: &Graph) -> EdgeColoring {
    let m = g.edge_count();
    if m == 0 {
        return EdgeColoring {
            colors: Vec::new(),
            color_count: 0,
        };
    }
    let palette = g.max_degree() + 1;
    let mut tables = ColorTables::new(g.vertex_count(), palette);
    let mut colors: Vec<Option<usize>> = vec![None; m];
    for e in 0..m {
        insert_edge(g, e, &mut tables, &mut colors);
    }
    let assigned: Vec<usize> = colors.into_iter().map(|c| c.expect("all colored")).collect();
    let color_count = assigned.iter().map(|&c| c + 1).max().unwrap_or(0);
    EdgeColoring {
        colors: assigned,
        color_count,
    }
}

fn insert_edge(g: &Graph, e0: usize, tables: &mut ColorTables, colors: &mut [Option<usize>]) {
    let (u, v0) = g.endpoints(e0).expect("edge id is valid");
    // Maximal fan at u starting with the uncolored edge to v0: each next fan
    // edge is colored with a color free at the previous fan vertex.
    let mut fan: Vec<(usize, usize)> = vec![(v0, e0)];
    'extend: loop {
        let (last, _) = *fan.last().expect("fan is nonempty");
        for c in 0..tables.at[last].len() {
            if !tables.is_free(last, c) {
                continue;
            }
            if let Some(edge) = tables.at[u][c] {
                let w = g.opposite(edge, u);
                if fan.iter().all(|&(x, _)| x != w) {
                    fan.push((w, edge));
                    continue 'extend;
                }
            }
        }
        break;
    }
    let c = tables.free(u);
    let d = tables.free(fan.last().expect("fan is nonempty").0);
    if !tables.is_free(u, d) {
        invert_path(g, u, d, c, tables, colors);
    }
    debug_assert!(tables.is_free(u, d));
    // First fan prefix that stays a fan under the current colors and ends at
    // a vertex missing d.
    let mut pick = None;
    for j in 0..fan.len() {
        if j > 0 {
            let prev = fan[j - 1].0;
            let col = colors[fan[j].1].expect("fan edges beyond the first are colored");
            if !tables.is_free(prev, col) {
                break;
            }
        }
        if tables.is_free(fan[j].0, d) {
            pick = Some(j);
            break;
        }
    }
    let j = pick.expect("some fan prefix accepts the free color");
    let shifted: Vec<usize> = (1..=j)
        .map(|i| colors[fan[i].1].expect("fan edge is colored"))
        .collect();
    for i in (1..=j).rev() {
        tables.clear(g, fan[i].1, colors);
    }
    for i in 0..j {
        tables.set(g, fan[i].1, shifted[i], colors);
    }
    tables.set(g, fan[j].1, d, colors);
}

/// Flips the colors along the maximal `first`/`second` alternating path that
/// starts at `start` (which has no `second`-colored edge).
fn invert_path(
    g: &Graph,
    start: usize,
    first: usize,
    second: usize,
    tables: &mut ColorTables,
    colors: &mut [Option<usize>],
) {
    let mut path = Vec::new();
    let mut cur = start;
    let mut want = first;
    while let Some(e) = tables.at[cur][want] {
        path.push(e);
        cur = g.opposite(e, cur);
        want = first + second - want;
    }
    let old: Vec<usize> = path
        .iter()
        .map(|&e| colors[e].expect("path edges are colored"))
        .collect();
    for &e in &path {
        tables.clear(g, e, colors);
    }
    for (&e, &c) in path.iter().zip(&old) {
        tables.set(g, e, first + second - c, colors);
    }
}

/// Two-coloring of the vertex set, or an odd cycle witness.
pub fn bipartition(g: &Graph) -> std::result::Result<Vec<u8>, Vec<usize>> {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, _) in g.incident(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Err(odd_cycle(&parent, &depth, v, w));
                }
            }
        }
    }
    Ok(side)
}

fn odd_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    debug_assert!(left.len() % 2 == 1);
    left
}

/// Edge coloring of a bipartite graph with exactly `max_degree` colors by
/// alternating-path insertion.
pub fn bipartite_edge_color(g: &Graph) -> Result<EdgeColoring> {
    bipartition(g).map_err(|cycle| Error::NotBipartite { cycle })?;
    let m = g.edge_count();
    if m == 0 {
        return Ok(EdgeColoring {
            colors: Vec::new(),
            color_count: 0,
        });
    }
    let palette = g.max_degree();
    let mut tables = ColorTables::new(g.vertex_count(), palette);
    let mut colors: Vec<Option<usize>> = vec![None; m];
    for e in 0..m {
        let (u, v) = g.endpoints(e).expect("edge id is valid");
        let fu = tables.free(u);
        if tables.is_free(v, fu) {
            tables.set(g, e, fu, &mut colors);
            continue;
        }
        let fv = tables.free(v);
        // fu is missing at u but present at v, fv the other way around. The
        // fu/fv path from v cannot end at u (it would close an odd walk), so
        // swapping it frees fu at v.
        invert_path(g, v, fu, fv, &mut tables, &mut colors);
        debug_assert!(tables.is_free(u, fu) && tables.is_free(v, fu));
        tables.set(g, e, fu, &mut colors);
    }
    let assigned: Vec<usize> = colors.into_iter().map(|c| c.expect("all colored")).collect();
    let color_count = assigned.iter().map(|&c| c + 1).max().unwrap_or(0);
    Ok(EdgeColoring {
        colors: assigned,
        color_count,
    })
}

/// Line-graph adjacency: one vertex per edge, adjacent when sharing an
/// endpoint.
pub fn line_graph_view(g: &Graph) -> SimpleAdj {
    let mut adj = vec![Vec::new(); g.edge_count()];
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                adj[e].push(f);
                adj[f].push(e);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    SimpleAdj {
        n: g.edge_count(),
        adj,
    }
}

/// Attempts a proper edge `k`-coloring: bipartite insertion when possible,
/// otherwise fan insertion followed by seeded Kempe-chain elimination of the
/// overflow class, and finally exact branch and bound on the line graph
/// within `node_limit`.
pub fn edge_color_target(
    g: &Graph,
    k: usize,
    node_limit: u64,
    seed: u64,
) -> Result<Search<EdgeColoring>> {
    let delta = g.max_degree();
    if k < delta {
        return Err(Error::TargetBelowMaxDegree {
            k,
            max_degree: delta,
        });
    }
    if g.edge_count() == 0 {
        return Ok(Search::Found(EdgeColoring {
            colors: Vec::new(),
            color_count: 0,
        }));
    }
    if let Ok(ec) = bipartite_edge_color(g) {
        debug_assert!(ec.color_count <= k);
        return Ok(Search::Found(ec));
    }
    let ec = vizing_edge_color(g);
    if ec.color_count <= k {
        return Ok(Search::Found(ec));
    }
    if let Some(ec) = kempe_reduce(g, &ec, k, seed) {
        return Ok(Search::Found(ec));
    }
    match exact_chromatic(&line_graph_view(g), k, node_limit)? {
        Search::Found(vc) => Ok(Search::Found(EdgeColoring {
            colors: vc.colors,
            color_count: vc.color_count,
        })),
        Search::Impossible => Ok(Search::Impossible),
        Search::Exhausted => Ok(Search::Exhausted),
    }
}

/// Tries to clear every edge colored >= k by random Kempe swaps.
fn kempe_reduce(g: &Graph, ec: &EdgeColoring, k: usize, seed: u64) -> Option<EdgeColoring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = g.edge_count();
    let mut tables = ColorTables::new(g.vertex_count(), ec.color_count.max(k));
    let mut colors: Vec<Option<usize>> = vec![None; m];
    let mut overflow = std::collections::VecDeque::new();
    for e in 0..m {
        if ec.colors[e] < k {
            tables.set(g, e, ec.colors[e], &mut colors);
        } else {
            overflow.push_back(e);
        }
    }
    let budget = 200 * overflow.len() as u64 + 200;
    for _ in 0..budget {
        let Some(e) = overflow.pop_front() else {
            let assigned: Vec<usize> = colors
                .into_iter()
                .map(|c| c.expect("all colored"))
                .collect();
            let color_count = assigned.iter().map(|&c| c + 1).max().unwrap_or(0);
            return Some(EdgeColoring {
                colors: assigned,
                color_count,
            });
        };
        let (u, v) = g.endpoints(e).expect("edge id is valid");
        let free_u: Vec<usize> = (0..k).filter(|&c| tables.is_free(u, c)).collect();
        let free_v: Vec<usize> = (0..k).filter(|&c| tables.is_free(v, c)).collect();
        if let Some(&c) = free_u.iter().find(|c| free_v.contains(c)) {
            tables.set(g, e, c, &mut colors);
            continue;
        }
        let a = free_u[rng.gen_range(0..free_u.len())];
        let b = free_v[rng.gen_range(0..free_v.len())];
        // Flip the a/b chain from u; if it does not end at v, color b works
        // at both ends.
        let mut chain_end = u;
        let mut want = b;
        while let Some(f) = tables.at[chain_end][want] {
            chain_end = g.opposite(f, chain_end);
            want = a + b - want;
        }
        if chain_end != v {
            invert_path(g, u, b, a, &mut tables, &mut colors);
            debug_assert!(tables.is_free(u, b) && tables.is_free(v, b));
            tables.set(g, e, b, &mut colors);
        } else {
            overflow.push_back(e);
        }
    }
    None
}
