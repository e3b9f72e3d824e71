//! Ground-truth engines: the conflict graph, the exact strong chromatic
//! index, and validity verifiers. The verifiers share nothing with the
//! pipelines beyond the conflict relation itself, which the test suite
//! cross-checks against line-graph distances.

use num_rational::Rational64;

use crate::coloring::{exact_chromatic, EdgeColoring, Search, VertexColoring};
use crate::graph::{edges_conflict, Graph, SimpleAdj};
use crate::strong::{CertifiedBound, Method, StrongColoring};

/// Graph on the edge ids of `g`, adjacent when the edges conflict. Coloring
/// it properly is exactly strong edge coloring of `g`.
pub fn build_conflict_graph(g: &Graph) -> Graph {
    let m = g.edge_count();
    let mut edges = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            if edges_conflict(g, e, f).expect("ids in range") {
                edges.push((e, f));
            }
        }
    }
    Graph::new(m, &edges).expect("conflict relation is simple")
}

/// Exact strong chromatic index by exact colorings of the conflict graph
/// with increasing budgets. `node_limit` applies to each budget's search.
pub fn exact_strong_index(g: &Graph, node_limit: u64) -> Search<usize> {
    match exact_strong_coloring(g, node_limit) {
        Search::Found(c) => Search::Found(c.color_count),
        Search::Impossible => Search::Impossible,
        Search::Exhausted => Search::Exhausted,
    }
}

/// Exact-by-search strong coloring; `Found` outputs are optimal.
pub fn exact_strong_coloring(g: &Graph, node_limit: u64) -> Search<StrongColoring> {
    let m = g.edge_count();
    if m == 0 {
        return Search::Found(StrongColoring {
            colors: Vec::new(),
            color_count: 0,
            method: Method::Exact,
            certified_bound: Some(CertifiedBound {
                value: Rational64::from_integer(0),
                formula: "exact".into(),
            }),
        });
    }
    let cg = build_conflict_graph(g);
    let view = cg.simple_view();
    for budget in 1..=m {
        match exact_chromatic(&view, budget, node_limit) {
            Ok(Search::Found(vc)) => {
                return Search::Found(StrongColoring {
                    color_count: vc.color_count,
                    colors: vc.colors,
                    method: Method::Exact,
                    certified_bound: Some(CertifiedBound {
                        value: Rational64::from_integer(budget as i64),
                        formula: "exact".into(),
                    }),
                });
            }
            Ok(Search::Impossible) => continue,
            Ok(Search::Exhausted) => return Search::Exhausted,
            Err(_) => unreachable!("budget is positive"),
        }
    }
    unreachable!("coloring every edge distinctly always succeeds")
}

/// A reproducible defect in a submitted coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two adjacent items (edges sharing an endpoint, or adjacent vertices)
    /// carry the same color.
    AdjacentSameColor { a: usize, b: usize, color: usize },
    /// Two edges at distance at most two carry the same color.
    ConflictSameColor { e: usize, f: usize, color: usize },
    /// An item carries no color.
    Uncolored { id: usize },
    /// Declared metadata disagrees with the assignment itself.
    BadClass { declared: usize, actual: usize },
}

/// Checks a complete strong coloring, including its declared color count.
pub fn verify_strong(g: &Graph, c: &StrongColoring) -> Vec<Violation> {
    let assignment: Vec<Option<usize>> = c.colors.iter().map(|&c| Some(c)).collect();
    let mut violations = verify_strong_assignment(g, &assignment);
    let mut distinct = c.colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != c.color_count {
        violations.push(Violation::BadClass {
            declared: c.color_count,
            actual: distinct.len(),
        });
    }
    violations
}

/// Checks a possibly partial edge-to-color assignment for the strong
/// condition; an empty result means valid.
pub fn verify_strong_assignment(g: &Graph, assignment: &[Option<usize>]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let m = g.edge_count().min(assignment.len());
    if assignment.len() != g.edge_count() {
        violations.push(Violation::BadClass {
            declared: assignment.len(),
            actual: g.edge_count(),
        });
    }
    let mut by_color: std::collections::BTreeMap<usize, Vec<usize>> =
        std::collections::BTreeMap::new();
    for (e, slot) in assignment.iter().enumerate().take(m) {
        match slot {
            None => violations.push(Violation::Uncolored { id: e }),
            Some(c) => by_color.entry(*c).or_default().push(e),
        }
    }
    for (color, class) in by_color {
        for (i, &e) in class.iter().enumerate() {
            for &f in &class[i + 1..] {
                if edges_conflict(g, e, f).expect("ids in range") {
                    let (a, b) = g.endpoints(e).expect("edge id valid");
                    let (x, y) = g.endpoints(f).expect("edge id valid");
                    if a == x || a == y || b == x || b == y {
                        violations.push(Violation::AdjacentSameColor { a: e, b: f, color });
                    } else {
                        violations.push(Violation::ConflictSameColor { e, f, color });
                    }
                }
            }
        }
    }
    violations
}

/// Checks a proper edge coloring: adjacent edges must differ.
pub fn verify_proper_edge(g: &Graph, c: &EdgeColoring) -> Vec<Violation> {
    let mut violations = Vec::new();
    if c.colors.len() != g.edge_count() {
        violations.push(Violation::BadClass {
            declared: c.colors.len(),
            actual: g.edge_count(),
        });
        return violations;
    }
    for v in g.vertices() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                if c.colors[e] == c.colors[f] {
                    violations.push(Violation::AdjacentSameColor {
                        a: e,
                        b: f,
                        color: c.colors[e],
                    });
                }
            }
        }
    }
    violations
}

/// Checks a proper vertex coloring against an adjacency view.
pub fn verify_proper_vertex(view: &SimpleAdj, c: &VertexColoring) -> Vec<Violation> {
    let mut violations = Vec::new();
    if c.colors.len() != view.n {
        violations.push(Violation::BadClass {
            declared: c.colors.len(),
            actual: view.n,
        });
        return violations;
    }
    for v in 0..view.n {
        for &w in &view.adj[v] {
            if v < w && c.colors[v] == c.colors[w] {
                violations.push(Violation::AdjacentSameColor {
                    a: v,
                    b: w,
                    color: c.colors[v],
                });
            }
        }
    }
    violations
}
