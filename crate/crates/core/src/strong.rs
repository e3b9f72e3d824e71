//! Strong edge coloring pipelines.
//!
//! The common mechanism: properly edge-color the graph, contract each color
//! class (a matching), vertex-color the contraction, and read the classes of
//! that coloring back as induced matchings. Specialized routes handle graphs
//! that are promised 1-planar, drawn graphs split into crossing and
//! non-crossing parts, and the degree-8/9 window where the coloring is grown
//! by deleting a low-degree vertex and re-inserting it from color lists.

use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::coloring::{
    bipartite_edge_color, bipartition, edge_color_target, exact_chromatic, greedy_vertex_color,
    vizing_edge_color, EdgeColoring, Search, VertexColoring,
};
use crate::density::{degeneracy_order, is_ab_graph, maximum_average_degree};
use crate::error::{Error, Result};
use crate::graph::{
    contract_matching, split_by_drawing, Drawing, Graph, Matching, Multigraph, StrongMatching,
};

/// Which pipeline produced a strong coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    MadPipeline,
    OnePlanar,
    SplitDrawing,
    IcPlanar,
    Optimal1Planar,
    Greedy,
    Exact,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::MadPipeline => "mad-pipeline",
            Method::OnePlanar => "oneplanar",
            Method::SplitDrawing => "split-drawing",
            Method::IcPlanar => "ic-planar",
            Method::Optimal1Planar => "optimal-1planar",
            Method::Greedy => "greedy",
            Method::Exact => "exact",
        }
    }
}

/// A color-count bound the pipeline actually certifies for its output,
/// with the formula it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedBound {
    pub value: Rational64,
    pub formula: String,
}

impl CertifiedBound {
    fn new(value: Rational64, formula: impl Into<String>) -> Self {
        CertifiedBound {
            value,
            formula: formula.into(),
        }
    }
}

/// Strong edge coloring: every color class is an induced matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongColoring {
    /// Color per edge id. Indices may be sparse within the palette.
    pub colors: Vec<usize>,
    /// Number of distinct colors used.
    pub color_count: usize,
    pub method: Method,
    pub certified_bound: Option<CertifiedBound>,
}

impl StrongColoring {
    fn assemble(colors: Vec<usize>, method: Method, bound: Option<CertifiedBound>) -> Self {
        let mut distinct: Vec<usize> = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let color_count = distinct.len();
        if let Some(b) = &bound {
            debug_assert!(Rational64::from_integer(color_count as i64) <= b.value);
        }
        StrongColoring {
            colors,
            color_count,
            method,
            certified_bound: bound,
        }
    }

    /// Color classes in increasing color order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (e, &c) in self.colors.iter().enumerate() {
            map.entry(c).or_default().push(e);
        }
        map.into_values().collect()
    }
}

/// Knobs shared by the pipelines: exact-search node budget, the seed for the
/// randomized Kempe eliminations, and an optional palette override for the
/// degree-8/9 extension route.
#[derive(Debug, Clone, Copy)]
pub struct PipelineParams {
    pub node_limit: u64,
    pub seed: u64,
    pub palette: Option<usize>,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            node_limit: 200_000,
            seed: 0,
            palette: None,
        }
    }
}

/// Splits a matching into strong matchings along a proper vertex coloring of
/// its contraction: the class of an edge is the color of the vertex it was
/// contracted to. Empty classes are dropped, so the result has at most
/// `vc.color_count` parts.
pub fn partition_matching(
    g: &Graph,
    m: &Matching,
    vc: &VertexColoring,
) -> Result<Vec<StrongMatching>> {
    let cm = contract_matching(g, m)?;
    partition_with_contraction(g, m, &cm, vc)
}

fn partition_with_contraction(
    g: &Graph,
    m: &Matching,
    cm: &Multigraph,
    vc: &VertexColoring,
) -> Result<Vec<StrongMatching>> {
    if vc.colors.len() != cm.vertex_count() {
        return Err(Error::ColoringSizeMismatch {
            expected: cm.vertex_count(),
            got: vc.colors.len(),
        });
    }
    for &((u, v), _) in cm.weighted_edges() {
        if vc.colors[u] == vc.colors[v] {
            return Err(Error::ImproperVertexColoring {
                u,
                v,
                color: vc.colors[u],
            });
        }
    }
    let mut vertex_of_edge: BTreeMap<usize, usize> = BTreeMap::new();
    for (v, origin) in cm.origin().iter().enumerate() {
        if let crate::graph::VertexOrigin::Edge(e) = origin {
            vertex_of_edge.insert(*e, v);
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in m.edge_ids() {
        let v = vertex_of_edge[&e];
        classes.entry(vc.colors[v]).or_default().push(e);
    }
    classes
        .into_values()
        .map(|edges| StrongMatching::new(g, edges))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| {
            debug_assert!(false, "a lifted class failed the induced check: {e}");
            e
        })
}

/// Upper bound on the least number of strong matchings a matching splits
/// into: contract, color the contraction greedily along a peeling order, and
/// lift. Returns the part count and the parts.
pub fn rho_upper(g: &Graph, m: &Matching) -> Result<(usize, Vec<StrongMatching>)> {
    let cm = contract_matching(g, m)?;
    let order = degeneracy_order(&cm.weighted_view()).ordering;
    let vc = greedy_vertex_color(&cm.simple_view(), &order)?;
    let classes = partition_with_contraction(g, m, &cm, &vc)?;
    Ok((classes.len(), classes))
}

/// Edges conflicting with `e`: everything incident to an endpoint or to a
/// neighbor of an endpoint.
fn conflicting_colors(g: &Graph, e: usize, colors: &[Option<usize>], blocked: &mut [bool]) {
    let (u, v) = g.endpoints(e).expect("edge id is valid");
    let mut mark = |f: usize| {
        if f != e {
            if let Some(c) = colors[f] {
                if c < blocked.len() {
                    blocked[c] = true;
                }
            }
        }
    };
    for w in [u, v] {
        for &(x, f) in g.incident(w) {
            mark(f);
            for &(_, h) in g.incident(x) {
                mark(h);
            }
        }
    }
}

fn greedy_strong_colors(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let delta = g.max_degree();
    let cap = 2 * delta * delta.saturating_sub(1) + 1;
    let mut colors: Vec<Option<usize>> = vec![None; m];
    let mut blocked = vec![false; cap];
    for e in 0..m {
        blocked.fill(false);
        conflicting_colors(g, e, &colors, &mut blocked);
        let c = blocked
            .iter()
            .position(|&b| !b)
            .expect("an edge conflicts with at most 2*Delta*(Delta-1) others");
        colors[e] = Some(c);
    }
    colors.into_iter().map(|c| c.expect("all colored")).collect()
}

/// Greedy strong coloring in increasing edge id order; never needs more than
/// `2*Delta*(Delta-1) + 1` colors.
pub fn strong_color_greedy(g: &Graph) -> StrongColoring {
    let delta = g.max_degree() as i64;
    let bound = 2 * delta * (delta - 1).max(0) + 1;
    StrongColoring::assemble(
        greedy_strong_colors(g),
        Method::Greedy,
        Some(CertifiedBound::new(
            Rational64::from_integer(bound),
            "2*Delta*(Delta-1)+1",
        )),
    )
}

/// Contract one matching class, vertex-color the contraction (exactly within
/// `budget` when given and the search finishes, else greedily along a peeling
/// order), and lift. A class that is already an induced matching is a single
/// part outright; besides skipping pointless work this is what keeps the
/// certified bounds valid on very sparse graphs, where two edges of a class
/// never conflict. The flag reports whether the budget was met.
fn lift_class(
    g: &Graph,
    class: &[usize],
    budget: Option<usize>,
    node_limit: u64,
) -> Result<(Vec<StrongMatching>, bool)> {
    if class.is_empty() {
        return Ok((Vec::new(), true));
    }
    if let Ok(sm) = StrongMatching::new(g, class.iter().copied()) {
        return Ok((vec![sm], true));
    }
    let m = Matching::new(g, class.iter().copied())?;
    let cm = contract_matching(g, &m)?;
    if let Some(b) = budget {
        if let Search::Found(vc) = exact_chromatic(&cm.simple_view(), b, node_limit)? {
            let classes = partition_with_contraction(g, &m, &cm, &vc)?;
            return Ok((classes, true));
        }
    }
    let order = degeneracy_order(&cm.weighted_view()).ordering;
    let vc = greedy_vertex_color(&cm.simple_view(), &order)?;
    let classes = partition_with_contraction(g, &m, &cm, &vc)?;
    Ok((classes, false))
}

/// Writes lifted classes into a global coloring, keeping the color ranges of
/// distinct source classes disjoint. Returns the number of classes written
/// and the running offset.
fn write_classes(classes: &[StrongMatching], colors: &mut [usize], offset: &mut usize) -> usize {
    for (i, class) in classes.iter().enumerate() {
        for &e in class.edge_ids() {
            colors[e] = *offset + i;
        }
    }
    *offset += classes.len();
    classes.len()
}

/// Strong coloring through the maximum-average-degree bound: edge-color,
/// contract each class, color contractions greedily, lift. The output always
/// satisfies `color_count <= (2*mad - 1) * k` for the achieved edge coloring
/// size `k`, hence also `(2*mad - 1) * (Delta + 1)`.
pub fn strong_color_mad(g: &Graph, params: &PipelineParams) -> StrongColoring {
    let mad = maximum_average_degree(g).mad;
    if g.edge_count() == 0 {
        return StrongColoring::assemble(
            Vec::new(),
            Method::MadPipeline,
            Some(CertifiedBound::new(Rational64::from_integer(0), "(2*mad-1)*chi'")),
        );
    }
    let ec = dispatch_edge_coloring(g, params);
    let mut colors = vec![0usize; g.edge_count()];
    let mut offset = 0;
    for class in ec.classes() {
        let (lifted, _) =
            lift_class(g, &class, None, params.node_limit).expect("classes are matchings");
        let two_mad_minus_one = Rational64::from_integer(2) * mad - Rational64::from_integer(1);
        debug_assert!(Rational64::from_integer(lifted.len() as i64) <= two_mad_minus_one);
        write_classes(&lifted, &mut colors, &mut offset);
    }
    let bound = (Rational64::from_integer(2) * mad - Rational64::from_integer(1))
        * Rational64::from_integer(ec.color_count as i64);
    StrongColoring::assemble(
        colors,
        Method::MadPipeline,
        Some(CertifiedBound::new(bound, "(2*mad-1)*chi'")),
    )
}

/// Bipartite graphs take the exact-degree route; otherwise a k-degenerate
/// graph with `Delta >= 2k` is edge-colorable with `Delta` colors, so the
/// targeted search is worth running before settling for `Delta + 1`.
fn dispatch_edge_coloring(g: &Graph, params: &PipelineParams) -> EdgeColoring {
    if let Ok(ec) = bipartite_edge_color(g) {
        return ec;
    }
    let delta = g.max_degree();
    let degeneracy = degeneracy_order(&g.weighted_view()).degeneracy;
    if delta >= 2 * degeneracy {
        if let Ok(Search::Found(ec)) = edge_color_target(g, delta, params.node_limit, params.seed)
        {
            return ec;
        }
    }
    vizing_edge_color(g)
}

/// Outcome of extending a strong coloring to the edges at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendOutcome {
    Extended {
        /// `(edge id, color)` for each previously uncolored edge at the vertex.
        assignments: Vec<(usize, usize)>,
        /// Size of each edge's availability list before colors were taken.
        list_sizes: Vec<usize>,
    },
    Infeasible {
        edge: usize,
    },
}

/// Extends a partial strong coloring to the edges at `u`. For each neighbor
/// `w` the list of available colors is the palette minus the colors seen at
/// the other neighbors of `u` and minus the colors seen at the neighbors of
/// `w` other than `u`; the edges then take distinct list colors greedily.
pub fn extend_at_vertex(
    g: &Graph,
    u: usize,
    partial: &[Option<usize>],
    palette: usize,
) -> Result<ExtendOutcome> {
    if u >= g.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: u,
            vertex_count: g.vertex_count(),
        });
    }
    if palette == 0 {
        return Err(Error::EmptyPalette);
    }
    if partial.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch {
            expected: g.edge_count(),
            got: partial.len(),
        });
    }
    for &(_, e) in g.incident(u) {
        if partial[e].is_some() {
            return Err(Error::VertexNotUncolored { vertex: u, edge: e });
        }
    }
    validate_partial(g, partial)?;
    let alive = vec![true; g.vertex_count()];
    let order: Vec<usize> = g.incident(u).iter().map(|&(w, _)| w).collect();
    Ok(extend_lists(g, u, &alive, partial, palette, &order))
}

/// Checks that same-colored edges never conflict.
fn validate_partial(g: &Graph, partial: &[Option<usize>]) -> Result<()> {
    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (e, c) in partial.iter().enumerate() {
        if let Some(c) = c {
            by_color.entry(*c).or_default().push(e);
        }
    }
    for class in by_color.values() {
        for (i, &e) in class.iter().enumerate() {
            for &f in &class[i + 1..] {
                if crate::graph::edges_conflict(g, e, f)? {
                    return Err(Error::InvalidPartialColoring { e, f });
                }
            }
        }
    }
    Ok(())
}

/// Core of the extension; `alive` masks vertices whose edges are considered
/// present (dead vertices carry no colored edges, so they impose nothing).
fn extend_lists(
    g: &Graph,
    u: usize,
    alive: &[bool],
    partial: &[Option<usize>],
    palette: usize,
    order: &[usize],
) -> ExtendOutcome {
    let mut assignments = Vec::with_capacity(order.len());
    let mut list_sizes = Vec::with_capacity(order.len());
    let mut taken = vec![false; palette];
    for &w in order {
        let e = g
            .incident(u)
            .iter()
            .find(|&&(x, _)| x == w)
            .map(|&(_, e)| e)
            .expect("order lists neighbors of u");
        let mut blocked = vec![false; palette];
        let mark_colors_at = |x: usize, blocked: &mut Vec<bool>| {
            for &(_, f) in g.incident(x) {
                if let Some(c) = partial[f] {
                    if c < palette {
                        blocked[c] = true;
                    }
                }
            }
        };
        for &w2 in order {
            if w2 != w {
                mark_colors_at(w2, &mut blocked);
            }
        }
        for &(x, _) in g.incident(w) {
            if x != u && alive[x] {
                mark_colors_at(x, &mut blocked);
            }
        }
        list_sizes.push(blocked.iter().filter(|&&b| !b).count());
        let choice = (0..palette).find(|&c| !blocked[c] && !taken[c]);
        match choice {
            Some(c) => {
                taken[c] = true;
                assignments.push((e, c));
            }
            None => return ExtendOutcome::Infeasible { edge: e },
        }
    }
    ExtendOutcome::Extended {
        assignments,
        list_sizes,
    }
}

/// Strong coloring of a graph promised to be 1-planar, dispatching on the
/// maximum degree. Only necessary conditions are checked: the hereditary
/// `|E| <= 4|V| - 8` bound, and for degree 8/9 the existence of a removable
/// vertex (degree at most 6, or a 7-vertex with a 7-neighbor) at every
/// peeling step.
pub fn strong_color_oneplanar(
    g: &Graph,
    drawing: Option<&Drawing>,
    params: &PipelineParams,
) -> Result<StrongColoring> {
    if let Some(d) = drawing {
        d.validate(g)?;
    }
    let verdict = is_ab_graph(
        &g.weighted_view(),
        Rational64::from_integer(4),
        Rational64::from_integer(8),
        3,
    )?;
    if let Some(witness) = verdict.violator {
        return Err(Error::NotOnePlanarDensity { witness });
    }
    let delta = g.max_degree();
    let bound_14d = CertifiedBound::new(
        Rational64::from_integer(14 * delta as i64),
        "14*Delta",
    );
    if delta <= 7 {
        // 2*Delta*(Delta-1) + 1 <= 14*Delta here, so greedy already certifies.
        return Ok(StrongColoring::assemble(
            greedy_strong_colors(g),
            Method::OnePlanar,
            Some(bound_14d),
        ));
    }
    if delta <= 9 {
        let palette = params.palette.unwrap_or(14 * delta);
        let colors = peel_and_extend(g, delta, palette)?;
        return Ok(StrongColoring::assemble(
            colors,
            Method::OnePlanar,
            Some(bound_14d),
        ));
    }
    match edge_color_target(g, delta, params.node_limit, params.seed)? {
        Search::Found(ec) => {
            let colors = lift_all_classes(g, &ec, params)?;
            Ok(StrongColoring::assemble(
                colors,
                Method::OnePlanar,
                Some(bound_14d),
            ))
        }
        _ => {
            let ec = vizing_edge_color(g);
            let colors = lift_all_classes(g, &ec, params)?;
            let bound = CertifiedBound::new(
                Rational64::from_integer(14 * (delta as i64 + 1)),
                "14*(Delta+1)",
            );
            Ok(StrongColoring::assemble(
                colors,
                Method::OnePlanar,
                Some(bound),
            ))
        }
    }
}

/// Contract-and-lift over every class of a proper edge coloring. Under the
/// hereditary (4,8) bound each contraction is 13-degenerate, so the greedy
/// coloring spends at most 14 colors per class.
fn lift_all_classes(g: &Graph, ec: &EdgeColoring, params: &PipelineParams) -> Result<Vec<usize>> {
    let mut colors = vec![0usize; g.edge_count()];
    let mut offset = 0;
    for class in ec.classes() {
        let (lifted, _) = lift_class(g, &class, None, params.node_limit)?;
        debug_assert!(lifted.len() <= 14);
        write_classes(&lifted, &mut colors, &mut offset);
    }
    Ok(colors)
}

/// The degree-8/9 route: peel removable vertices until at most `palette`
/// edges remain, color those distinctly, then re-insert each vertex through
/// `extend_at_vertex` lists. List sizes are asserted against the counting
/// bounds that make the extension always feasible.
fn peel_and_extend(g: &Graph, delta: usize, palette: usize) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive_edges = m;
    let mut stack: Vec<(usize, Option<usize>)> = Vec::new();
    while alive_edges > palette {
        let (dmin, u) = (0..n)
            .filter(|&v| alive[v])
            .map(|v| (deg[v], v))
            .min()
            .expect("edges remain, so vertices remain");
        let victim = if dmin <= 6 {
            (u, None)
        } else if dmin == 7 {
            let pair = (0..n)
                .filter(|&v| alive[v] && deg[v] == 7)
                .find_map(|v| {
                    g.incident(v)
                        .iter()
                        .find(|&&(w, _)| alive[w] && deg[w] == 7)
                        .map(|&(w, _)| (v, w))
                });
            match pair {
                Some((v, w)) => (v, Some(w)),
                None => return Err(Error::NotOnePlanarPeel),
            }
        } else {
            // Hereditary (4,8) forces minimum degree at most 7.
            return Err(Error::NotOnePlanarPeel);
        };
        let (u, seven) = victim;
        alive[u] = false;
        alive_edges -= deg[u];
        for &(w, _) in g.incident(u) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
        stack.push((u, seven));
    }
    let mut partial: Vec<Option<usize>> = vec![None; m];
    let mut next = 0;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if alive[a] && alive[b] {
            partial[e] = Some(next);
            next += 1;
        }
    }
    debug_assert!(next <= palette);
    for (u, seven) in stack.into_iter().rev() {
        alive[u] = true;
        let mut order: Vec<usize> = g
            .incident(u)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| alive[w])
            .collect();
        if let Some(u0) = seven {
            order.retain(|&w| w != u0);
            order.insert(0, u0);
        }
        let s = order.len() as i64;
        let d = delta as i64;
        let p = palette as i64;
        match extend_lists(g, u, &alive, &partial, palette, &order) {
            ExtendOutcome::Extended {
                assignments,
                list_sizes,
            } => {
                for (i, &size) in list_sizes.iter().enumerate() {
                    let floor = if seven.is_some() {
                        if i == 0 {
                            p - 6 * (d - 1) - 6 * d
                        } else {
                            p - 6 - 5 * (d - 1) - 8 * d
                        }
                    } else {
                        p - (s - 1) * (d - 1) - (d - 1) * d
                    };
                    assert!(
                        size as i64 >= floor,
                        "list at vertex {u} has {size} colors, counting bound {floor}"
                    );
                }
                for (e, c) in assignments {
                    partial[e] = Some(c);
                }
            }
            ExtendOutcome::Infeasible { .. } => return Err(Error::ExtensionFailed { vertex: u }),
        }
    }
    Ok(partial
        .into_iter()
        .map(|c| c.expect("every edge colored"))
        .collect())
}

struct SplitRoute {
    colors: Vec<usize>,
    plain_classes: usize,
    crossed_classes: usize,
    plain_max: usize,
    crossed_max: usize,
    /// Every non-crossing class fit in 6 parts and every crossing class in 14.
    canonical: bool,
}

/// Lifts the classes of the two side colorings: non-crossing classes go
/// through a budget-6 exact coloring of the contraction (1-planar
/// contractions of 1-planar graphs are 6-chromatic) with a greedy fallback;
/// crossing classes take the plain degenerate route.
fn split_route(
    g: &Graph,
    ec_plain: &EdgeColoring,
    plain_edges: &[usize],
    ec_crossed: &EdgeColoring,
    crossed_edges: &[usize],
    params: &PipelineParams,
) -> Result<SplitRoute> {
    let mut colors = vec![0usize; g.edge_count()];
    let mut offset = 0;
    let mut plain_max = 0;
    let mut crossed_max = 0;
    for class in ec_plain.classes() {
        let host_ids: Vec<usize> = class.iter().map(|&e| plain_edges[e]).collect();
        let (lifted, _) = lift_class(g, &host_ids, Some(6), params.node_limit)?;
        plain_max = plain_max.max(lifted.len());
        write_classes(&lifted, &mut colors, &mut offset);
    }
    for class in ec_crossed.classes() {
        let host_ids: Vec<usize> = class.iter().map(|&e| crossed_edges[e]).collect();
        let (lifted, _) = lift_class(g, &host_ids, None, params.node_limit)?;
        crossed_max = crossed_max.max(lifted.len());
        write_classes(&lifted, &mut colors, &mut offset);
    }
    Ok(SplitRoute {
        colors,
        plain_classes: ec_plain.color_count,
        crossed_classes: ec_crossed.color_count,
        plain_max,
        crossed_max,
        canonical: plain_max <= 6 && crossed_max <= 14,
    })
}

/// Proper edge coloring for the non-crossing (planar) side: exact degree for
/// bipartite inputs, a targeted search at `Delta` when `Delta >= 7` (planar
/// graphs there are class I), else fan insertion.
fn planar_edge_coloring(h: &Graph, params: &PipelineParams) -> EdgeColoring {
    if let Ok(ec) = bipartite_edge_color(h) {
        return ec;
    }
    let delta = h.max_degree();
    if delta >= 7 {
        if let Ok(Search::Found(ec)) = edge_color_target(h, delta, params.node_limit, params.seed)
        {
            return ec;
        }
    }
    vizing_edge_color(h)
}

fn general_edge_coloring(h: &Graph) -> EdgeColoring {
    if let Ok(ec) = bipartite_edge_color(h) {
        return ec;
    }
    vizing_edge_color(h)
}

/// Strong coloring of a drawn 1-planar graph by splitting into non-crossing
/// and crossing edges; certifies `6*chi'(H1) + 14*chi'(H2)` when every
/// budget-6 contraction coloring succeeds, otherwise the achieved per-class
/// maxima.
pub fn strong_color_split(g: &Graph, d: &Drawing, params: &PipelineParams) -> Result<StrongColoring> {
    let split = split_by_drawing(g, d)?;
    let verdict = is_ab_graph(
        &split.plain.weighted_view(),
        Rational64::from_integer(3),
        Rational64::from_integer(6),
        3,
    )?;
    if let Some(witness) = verdict.violator {
        return Err(Error::NotPlanarDensity { witness });
    }
    for part in [&split.crossed, g] {
        let verdict = is_ab_graph(
            &part.weighted_view(),
            Rational64::from_integer(4),
            Rational64::from_integer(8),
            3,
        )?;
        if let Some(witness) = verdict.violator {
            return Err(Error::NotOnePlanarDensity { witness });
        }
    }
    let ec1 = planar_edge_coloring(&split.plain, params);
    let ec2 = general_edge_coloring(&split.crossed);
    let route = split_route(g, &ec1, &split.plain_edges, &ec2, &split.crossed_edges, params)?;
    debug_assert!(route.crossed_max <= 14);
    let bound = split_bound(&route);
    Ok(StrongColoring::assemble(
        route.colors,
        Method::SplitDrawing,
        Some(bound),
    ))
}

fn split_bound(route: &SplitRoute) -> CertifiedBound {
    if route.canonical {
        CertifiedBound::new(
            Rational64::from_integer((6 * route.plain_classes + 14 * route.crossed_classes) as i64),
            "6*chi'(H1)+14*chi'(H2)",
        )
    } else {
        // Some contraction refused its budget; report the achieved maxima.
        let a = route.plain_max;
        let b = route.crossed_max;
        CertifiedBound::new(
            Rational64::from_integer((a * route.plain_classes + b * route.crossed_classes) as i64),
            format!("{a}*chi'(H1)+{b}*chi'(H2)"),
        )
    }
}

/// Strong coloring of an IC-planar drawn graph (no two crossing pairs share
/// an endpoint): greedy up to degree 5, otherwise the split route where the
/// crossing side is a single matching. Certifies `6*Delta + 20`.
pub fn strong_color_ic(g: &Graph, d: &Drawing, params: &PipelineParams) -> Result<StrongColoring> {
    d.validate(g)?;
    let mut crossing_edges_at = vec![0usize; g.vertex_count()];
    for e in d.crossing_edges() {
        let (u, v) = g.endpoints(e)?;
        for w in [u, v] {
            crossing_edges_at[w] += 1;
            if crossing_edges_at[w] > 1 {
                return Err(Error::NotIcPlanar { vertex: w });
            }
        }
    }
    let delta = g.max_degree();
    let bound = CertifiedBound::new(
        Rational64::from_integer(6 * delta as i64 + 20),
        "6*Delta+20",
    );
    if delta <= 5 {
        return Ok(StrongColoring::assemble(
            greedy_strong_colors(g),
            Method::IcPlanar,
            Some(bound),
        ));
    }
    let split = split_by_drawing(g, d)?;
    debug_assert!(split.crossed.max_degree() <= 1, "IC crossing edges form a matching");
    let ec1 = planar_edge_coloring(&split.plain, params);
    let ec2 = general_edge_coloring(&split.crossed);
    let route = split_route(g, &ec1, &split.plain_edges, &ec2, &split.crossed_edges, params)?;
    let bound = if route.canonical {
        bound
    } else {
        split_bound(&route)
    };
    Ok(StrongColoring::assemble(
        route.colors,
        Method::IcPlanar,
        Some(bound),
    ))
}

/// Strong coloring of an optimal 1-planar graph (`|E| = 4|V| - 8`): the
/// non-crossing side is bipartite and perfectly balanced against the
/// crossing side at every vertex, so exact-degree coloring on one side and
/// fan insertion on the other certify `10*Delta + 14`.
pub fn strong_color_optimal(
    g: &Graph,
    d: &Drawing,
    params: &PipelineParams,
) -> Result<StrongColoring> {
    let expected = 4 * g.vertex_count() as i64 - 8;
    if g.edge_count() as i64 != expected {
        return Err(Error::NotOptimal {
            edges: g.edge_count(),
            vertices: g.vertex_count(),
            expected,
        });
    }
    let split = split_by_drawing(g, d)?;
    if let Err(cycle) = bipartition(&split.plain) {
        return Err(Error::SplitNotBipartite { cycle });
    }
    for v in g.vertices() {
        if split.plain.degree(v) != split.crossed.degree(v) {
            return Err(Error::NotBalanced {
                vertex: v,
                non_crossing: split.plain.degree(v),
                crossing: split.crossed.degree(v),
            });
        }
    }
    let delta = g.max_degree();
    let ec1 = bipartite_edge_color(&split.plain)
        .expect("the non-crossing side was just checked bipartite");
    debug_assert_eq!(ec1.color_count, delta / 2);
    let ec2 = vizing_edge_color(&split.crossed);
    debug_assert!(ec2.color_count <= delta / 2 + 1);
    let route = split_route(g, &ec1, &split.plain_edges, &ec2, &split.crossed_edges, params)?;
    let bound = if route.canonical {
        CertifiedBound::new(
            Rational64::from_integer(10 * delta as i64 + 14),
            "10*Delta+14",
        )
    } else {
        split_bound(&route)
    };
    Ok(StrongColoring::assemble(
        route.colors,
        Method::Optimal1Planar,
        Some(bound),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_strong;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
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

    #[test]
    fn partition_splits_alternating_c6_into_singletons() {
        let g = cycle(6);
        let m = Matching::new(&g, [0, 2, 4]).unwrap();
        let cm = contract_matching(&g, &m).unwrap();
        assert_eq!(cm.vertex_count(), 3);
        let vc = VertexColoring {
            colors: vec![0, 1, 2],
            color_count: 3,
        };
        let classes = partition_matching(&g, &m, &vc).unwrap();
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn partition_rejects_improper_colorings() {
        let g = cycle(6);
        let m = Matching::new(&g, [0, 2, 4]).unwrap();
        let vc = VertexColoring {
            colors: vec![0, 0, 1],
            color_count: 2,
        };
        assert!(matches!(
            partition_matching(&g, &m, &vc),
            Err(Error::ImproperVertexColoring { .. })
        ));
        let vc = VertexColoring {
            colors: vec![0, 1],
            color_count: 2,
        };
        assert!(matches!(
            partition_matching(&g, &m, &vc),
            Err(Error::ColoringSizeMismatch { .. })
        ));
    }

    #[test]
    fn rho_bounds() {
        let g = cycle(6);
        assert_eq!(rho_upper(&g, &Matching::empty()).unwrap().0, 0);
        let alternating = Matching::new(&g, [0, 2, 4]).unwrap();
        assert_eq!(rho_upper(&g, &alternating).unwrap().0, 3);
        // A single edge is itself a strong matching.
        let single = Matching::new(&g, [1]).unwrap();
        assert_eq!(rho_upper(&g, &single).unwrap().0, 1);
    }

    #[test]
    fn greedy_strong_on_small_graphs() {
        let single = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(strong_color_greedy(&single).color_count, 1);

        let c5 = cycle(5);
        let c = strong_color_greedy(&c5);
        assert_eq!(c.color_count, 5);
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(5)
        );
        assert!(verify_strong(&c5, &c).is_empty());

        let k5 = complete(5);
        let c = strong_color_greedy(&k5);
        assert_eq!(c.color_count, 10);
        assert!(verify_strong(&k5, &c).is_empty());
    }

    #[test]
    fn mad_pipeline_respects_its_bound() {
        let params = PipelineParams::default();

        let claw = star(3);
        let c = strong_color_mad(&claw, &params);
        assert!(verify_strong(&claw, &c).is_empty());
        assert!(c.color_count <= 6);
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(6)
        );

        let c5 = cycle(5);
        let c = strong_color_mad(&c5, &params);
        assert!(verify_strong(&c5, &c).is_empty());
        assert!(c.color_count >= 5);
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(9)
        );

        let pet = petersen();
        let c = strong_color_mad(&pet, &params);
        assert!(verify_strong(&pet, &c).is_empty());
        assert!(
            Rational64::from_integer(c.color_count as i64)
                <= Rational64::from_integer(20)
        );
    }

    #[test]
    fn extend_colors_a_pendant_vertex() {
        // Path a-b plus pendant at b: remove a, color the rest, re-insert.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let partial = vec![None, Some(0)];
        match extend_at_vertex(&g, 0, &partial, 5).unwrap() {
            ExtendOutcome::Extended {
                assignments,
                list_sizes,
            } => {
                assert_eq!(assignments, vec![(0, 1)]);
                assert_eq!(list_sizes, vec![4]);
            }
            other => panic!("expected extension, got {other:?}"),
        }
    }

    #[test]
    fn extend_validates_inputs() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            extend_at_vertex(&g, 0, &[Some(0), Some(0)], 5),
            Err(Error::VertexNotUncolored { .. })
        ));
        // Conflicting same-colored edges elsewhere are rejected.
        let g4 = Graph::new(4, &[(1, 2), (2, 3), (0, 1)]).unwrap();
        assert!(matches!(
            extend_at_vertex(&g4, 0, &[Some(0), Some(0), None], 5),
            Err(Error::InvalidPartialColoring { .. })
        ));
    }

    /// With the greedy palette, re-inserting a pendant vertex always
    /// succeeds: its single list loses at most (Delta-1)*Delta colors.
    #[test]
    fn extend_never_fails_at_pendants_with_greedy_palette() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9e4d);
        for _ in 0..100 {
            let n = rng.gen_range(3..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            // Pendant vertex n attached last, so subgraph edge ids align.
            let anchor = rng.gen_range(0..n);
            edges.push((anchor, n));
            let g = Graph::new(n + 1, &edges).unwrap();
            let sub = Graph::new(n + 1, &edges[..edges.len() - 1]).unwrap();
            let mut partial: Vec<Option<usize>> =
                greedy_strong_colors(&sub).into_iter().map(Some).collect();
            partial.push(None);
            let delta = g.max_degree();
            let palette = 2 * delta * (delta - 1) + 1;
            match extend_at_vertex(&g, n, &partial, palette).unwrap() {
                ExtendOutcome::Extended { list_sizes, .. } => {
                    assert!(list_sizes[0] as i64 >= palette as i64 - ((delta as i64 - 1) * delta as i64));
                }
                ExtendOutcome::Infeasible { .. } => panic!("pendant extension failed"),
            }
        }
    }

    #[test]
    fn extend_reports_infeasible_on_empty_lists() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let partial = vec![None, Some(0)];
        assert_eq!(
            extend_at_vertex(&g, 0, &partial, 1).unwrap(),
            ExtendOutcome::Infeasible { edge: 0 }
        );
    }

    #[test]
    fn oneplanar_small_degrees_use_greedy_route() {
        let params = PipelineParams::default();
        let k5 = complete(5);
        let c = strong_color_oneplanar(&k5, None, &params).unwrap();
        assert_eq!(c.method, Method::OnePlanar);
        assert_eq!(c.color_count, 10);
        assert!(verify_strong(&k5, &c).is_empty());

        let k6 = complete(6);
        let c = strong_color_oneplanar(&k6, None, &params).unwrap();
        assert!(c.color_count <= 41);
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(70)
        );
        assert!(verify_strong(&k6, &c).is_empty());
    }

    #[test]
    fn oneplanar_rejects_dense_graphs() {
        let k7 = complete(7);
        assert!(matches!(
            strong_color_oneplanar(&k7, None, &PipelineParams::default()),
            Err(Error::NotOnePlanarDensity { .. })
        ));
    }

    fn cube() -> Graph {
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

    #[test]
    fn split_with_empty_drawing_reduces_to_the_planar_route() {
        let g = cube();
        let c = strong_color_split(&g, &Drawing::empty(), &PipelineParams::default()).unwrap();
        assert!(crate::oracle::verify_strong(&g, &c).is_empty());
        let bound = c.certified_bound.as_ref().unwrap();
        assert_eq!(bound.formula, "6*chi'(H1)+14*chi'(H2)");
        // chi'(H1) = 3 for the cube, no crossing classes at all.
        assert_eq!(bound.value, Rational64::from_integer(18));
    }

    #[test]
    fn split_cube_with_one_crossing_pair() {
        // Cube plus both diagonals of the face 0-1-3-2, drawn crossing.
        let mut edges: Vec<(usize, usize)> = cube().edges().to_vec();
        let d1 = edges.len();
        edges.push((0, 3));
        let d2 = edges.len();
        edges.push((1, 2));
        let g = Graph::new(8, &edges).unwrap();
        let drawing = Drawing::new(&g, [(d1, d2)]).unwrap();
        let split = split_by_drawing(&g, &drawing).unwrap();
        assert_eq!(split.plain.edge_count(), 12);
        assert_eq!(split.crossed.edge_count(), 2);
        let c = strong_color_split(&g, &drawing, &PipelineParams::default()).unwrap();
        assert!(crate::oracle::verify_strong(&g, &c).is_empty());
        // chi'(H1) = 3 (cube), chi'(H2) = 1 (two disjoint diagonals).
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(32)
        );
        assert!(c.color_count <= 32);
    }

    /// K5 with one pendant per branch vertex: all 15 edges pairwise
    /// conflict, so the greedy route inside the IC pipeline uses exactly 15.
    #[test]
    fn ic_on_pendant_k5_uses_every_edge_color() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        for v in 0..5 {
            edges.push((v, 5 + v));
        }
        let g = Graph::new(10, &edges).unwrap();
        let drawing = Drawing::new(&g, [(0, 9)]).unwrap();
        let c = strong_color_ic(&g, &drawing, &PipelineParams::default()).unwrap();
        assert_eq!(c.method, Method::IcPlanar);
        assert_eq!(c.color_count, 15);
        assert!(crate::oracle::verify_strong(&g, &c).is_empty());
        assert_eq!(
            c.certified_bound.as_ref().unwrap().value,
            Rational64::from_integer(6 * 5 + 20)
        );
    }

    #[test]
    fn ic_rejects_pairs_sharing_a_vertex() {
        // Two crossing pairs meeting at vertex 0.
        let g = Graph::new(
            8,
            &[(0, 1), (2, 3), (0, 4), (5, 6), (1, 7), (4, 2)],
        )
        .unwrap();
        let d = Drawing::new(&g, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            strong_color_ic(&g, &d, &PipelineParams::default()),
            Err(Error::NotIcPlanar { vertex: 0 })
        ));
    }

    #[test]
    fn optimal_rejects_wrong_edge_counts() {
        let g = cube();
        assert!(matches!(
            strong_color_optimal(&g, &Drawing::empty(), &PipelineParams::default()),
            Err(Error::NotOptimal { .. })
        ));
    }
}
