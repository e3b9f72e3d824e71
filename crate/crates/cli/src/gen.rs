//! Instance generators. Every family validates its defining invariants
//! before returning, so a generated instance is guaranteed to satisfy the
//! preconditions of the pipeline it is meant for.

use matchlift_core::{
    bipartition, is_ab_graph, split_by_drawing, Drawing, Graph,
};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generated instance failed its family validator: {0}")]
    ValidatorFailed(String),
}

/// A generated graph, with a drawing when the family defines one.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub drawing: Option<Drawing>,
}

/// Base quadrangulation for the optimal 1-planar construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadBase {
    Cube,
    /// Even cycle of length `2k` with two poles, one joined to the odd
    /// positions and one to the even ones.
    PseudoDoubleWheel { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// K5 with `delta - 4` pendants on each branch vertex.
    HDelta { delta: usize },
    /// A plane quadrangulation with a crossing diagonal pair in every face.
    QuadOptimal { base: QuadBase },
    /// A plane quadrangulation with crossing pairs in some vertex-disjoint
    /// faces, hence no two pairs share an endpoint.
    IcPlanar { k: usize, pairs: usize },
    /// Plane triangulation grown by repeated face insertion from K4.
    RandomPlanar { n: usize },
    RandomSimple { n: usize, edges: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
}

pub fn generate(family: &Family, seed: u64) -> Result<Instance, GenError> {
    let instance = build(family, seed)?;
    validate(family, &instance)?;
    Ok(instance)
}

fn bad(msg: impl Into<String>) -> GenError {
    GenError::InvalidParams(msg.into())
}

fn build(family: &Family, seed: u64) -> Result<Instance, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::HDelta { delta } => {
            if delta < 4 {
                return Err(bad("h-delta needs delta >= 4"));
            }
            let mut edges = Vec::new();
            for u in 0..5 {
                for v in u + 1..5 {
                    edges.push((u, v));
                }
            }
            let mut next = 5;
            for v in 0..5 {
                for _ in 0..delta - 4 {
                    edges.push((v, next));
                    next += 1;
                }
            }
            let graph = Graph::new(next, &edges).expect("construction is simple");
            // K5 drawn with a single crossing; pendants cross nothing.
            let drawing = Drawing::new(&graph, [(0, 9)]).expect("edges 0-1 and 3-4 are disjoint");
            Ok(Instance {
                graph,
                drawing: Some(drawing),
            })
        }
        Family::QuadOptimal { base } => {
            let (n, faces) = quadrangulation(base)?;
            let mut edges = quad_edges(&faces);
            let mut pairs = Vec::new();
            for face in &faces {
                let [a, b, c, d] = *face;
                let e1 = edges.len();
                edges.push((a.min(c), a.max(c)));
                let e2 = edges.len();
                edges.push((b.min(d), b.max(d)));
                pairs.push((e1, e2));
            }
            let graph = Graph::new(n, &edges)
                .map_err(|e| GenError::ValidatorFailed(e.to_string()))?;
            let drawing = Drawing::new(&graph, pairs)
                .map_err(|e| GenError::ValidatorFailed(e.to_string()))?;
            Ok(Instance {
                graph,
                drawing: Some(drawing),
            })
        }
        Family::IcPlanar { k, pairs } => {
            let (n, faces) = quadrangulation(QuadBase::PseudoDoubleWheel { k })?;
            let mut order: Vec<usize> = (0..faces.len()).collect();
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            let mut edges = quad_edges(&faces);
            let mut used = vec![false; n];
            let mut chosen = Vec::new();
            for &f in &order {
                if chosen.len() == pairs {
                    break;
                }
                if faces[f].iter().all(|&v| !used[v]) {
                    for &v in &faces[f] {
                        used[v] = true;
                    }
                    chosen.push(f);
                }
            }
            let mut crossing = Vec::new();
            for &f in &chosen {
                let [a, b, c, d] = faces[f];
                let e1 = edges.len();
                edges.push((a.min(c), a.max(c)));
                let e2 = edges.len();
                edges.push((b.min(d), b.max(d)));
                crossing.push((e1, e2));
            }
            let graph = Graph::new(n, &edges)
                .map_err(|e| GenError::ValidatorFailed(e.to_string()))?;
            let drawing = Drawing::new(&graph, crossing)
                .map_err(|e| GenError::ValidatorFailed(e.to_string()))?;
            Ok(Instance {
                graph,
                drawing: Some(drawing),
            })
        }
        Family::RandomPlanar { n } => {
            if n < 4 {
                return Err(bad("random-planar needs n >= 4"));
            }
            let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
            for v in 4..n {
                let f = rng.gen_range(0..faces.len());
                let [a, b, c] = faces.swap_remove(f);
                edges.push((a, v));
                edges.push((b, v));
                edges.push((c, v));
                faces.push([a, b, v]);
                faces.push([a, c, v]);
                faces.push([b, c, v]);
            }
            Ok(Instance {
                graph: Graph::new(n, &edges).expect("face insertion stays simple"),
                drawing: None,
            })
        }
        Family::RandomSimple { n, edges } => {
            if n == 0 {
                return Err(bad("random-simple needs n >= 1"));
            }
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            if edges > pairs.len() {
                return Err(bad(format!(
                    "random-simple on {n} vertices has at most {} edges",
                    pairs.len()
                )));
            }
            for i in (1..pairs.len()).rev() {
                pairs.swap(i, rng.gen_range(0..=i));
            }
            pairs.truncate(edges);
            pairs.sort_unstable();
            Ok(Instance {
                graph: Graph::new(n, &pairs).expect("distinct pairs"),
                drawing: None,
            })
        }
        Family::Path { n } => {
            if n == 0 {
                return Err(bad("path needs n >= 1"));
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Ok(Instance {
                graph: Graph::new(n, &edges).expect("path is simple"),
                drawing: None,
            })
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Instance {
                graph: Graph::new(n, &edges).expect("cycle is simple"),
                drawing: None,
            })
        }
        Family::Star { leaves } => {
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Ok(Instance {
                graph: Graph::new(leaves + 1, &edges).expect("star is simple"),
                drawing: None,
            })
        }
        Family::Complete { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Instance {
                graph: Graph::new(n, &edges).expect("complete is simple"),
                drawing: None,
            })
        }
        Family::CompleteBipartite { a, b } => {
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            Ok(Instance {
                graph: Graph::new(a + b, &edges).expect("bipartite is simple"),
                drawing: None,
            })
        }
    }
}

/// Faces of the base quadrangulation, each as a 4-cycle in boundary order.
fn quadrangulation(base: QuadBase) -> Result<(usize, Vec<[usize; 4]>), GenError> {
    match base {
        QuadBase::Cube => {
            let faces = vec![
                [0, 1, 3, 2],
                [4, 5, 7, 6],
                [0, 1, 5, 4],
                [2, 3, 7, 6],
                [0, 2, 6, 4],
                [1, 3, 7, 5],
            ];
            Ok((8, faces))
        }
        QuadBase::PseudoDoubleWheel { k } => {
            if k < 3 {
                return Err(bad("pseudo-double-wheel needs k >= 3"));
            }
            // 0 = north pole (odd cycle positions), 1 = south pole (even
            // positions), cycle vertices 2..2k+2.
            let x = |i: usize| 2 + (i % (2 * k));
            let mut faces = Vec::with_capacity(2 * k);
            for i in 0..k {
                faces.push([0, x(2 * i), x(2 * i + 1), x(2 * i + 2)]);
                faces.push([1, x(2 * i + 1), x(2 * i + 2), x(2 * i + 3)]);
            }
            Ok((2 * k + 2, faces))
        }
    }
}

/// Boundary edges of a face list, deduplicated, in first-seen order.
fn quad_edges(faces: &[[usize; 4]]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for face in faces {
        for i in 0..4 {
            let (u, v) = (face[i], face[(i + 1) % 4]);
            let key = (u.min(v), u.max(v));
            if !edges.contains(&key) {
                edges.push(key);
            }
        }
    }
    edges
}

fn validate(family: &Family, instance: &Instance) -> Result<(), GenError> {
    let fail = |msg: String| Err(GenError::ValidatorFailed(msg));
    let g = &instance.graph;
    match *family {
        Family::HDelta { delta } => {
            if g.edge_count() != 5 * delta - 10 {
                return fail(format!("h-delta edge count {}", g.edge_count()));
            }
            if g.max_degree() != delta {
                return fail(format!("h-delta max degree {}", g.max_degree()));
            }
            check_ic(instance)?;
        }
        Family::QuadOptimal { .. } => {
            if g.edge_count() != 4 * g.vertex_count() - 8 {
                return fail(format!(
                    "quad-optimal has {} edges on {} vertices",
                    g.edge_count(),
                    g.vertex_count()
                ));
            }
            let d = instance.drawing.as_ref().expect("family carries a drawing");
            let split = split_by_drawing(g, d).map_err(|e| GenError::ValidatorFailed(e.to_string()))?;
            for v in g.vertices() {
                if split.plain.degree(v) != split.crossed.degree(v) {
                    return fail(format!("vertex {v} unbalanced"));
                }
            }
            if bipartition(&split.plain).is_err() {
                return fail("non-crossing part is not bipartite".into());
            }
        }
        Family::IcPlanar { .. } => check_ic(instance)?,
        Family::RandomPlanar { .. } => {
            let verdict = is_ab_graph(
                &g.weighted_view(),
                Rational64::from_integer(3),
                Rational64::from_integer(6),
                3,
            )
            .expect("parameters are valid");
            if !verdict.holds {
                return fail("triangulation violates planar density".into());
            }
        }
        _ => {}
    }
    Ok(())
}

fn check_ic(instance: &Instance) -> Result<(), GenError> {
    let d = instance
        .drawing
        .as_ref()
        .ok_or_else(|| GenError::ValidatorFailed("IC family without drawing".into()))?;
    let mut seen = vec![false; instance.graph.vertex_count()];
    for e in d.crossing_edges() {
        let (u, v) = instance.graph.endpoints(e).expect("drawing validated");
        for w in [u, v] {
            if seen[w] {
                return Err(GenError::ValidatorFailed(format!(
                    "vertex {w} meets two crossing edges"
                )));
            }
            seen[w] = true;
        }
    }
    Ok(())
}
