//! Constructive strong edge coloring with certifiable color counts.
//!
//! A strong edge coloring asks every color class to be an induced matching:
//! edges at distance at most two never share a color. The engine here colors
//! the edges properly first, contracts each color class, vertex-colors the
//! contraction, and reads the classes back as induced matchings. Density
//! certificates (exact maximum average degree, hereditary sparsity, and
//! degeneracy orderings) drive the bounds the pipelines report, and exact
//! search oracles verify everything at small scale.
//!
//! The main entry points are the pipelines in [`strong`], the coloring
//! engines in [`coloring`], the density certificates in [`density`], and the
//! ground-truth verifiers in [`oracle`].

pub mod coloring;
pub mod density;
pub mod error;
mod flow;
pub mod graph;
pub mod oracle;
pub mod strong;

pub use num_rational::Rational64;

pub use coloring::{
    bipartite_edge_color, bipartition, edge_color_target, exact_chromatic, greedy_vertex_color,
    line_graph_view, vizing_edge_color, EdgeColoring, Search, VertexColoring,
};
pub use density::{
    default_min_vertices, degeneracy_order, is_ab_graph, maximum_average_degree, DegeneracyReport,
    DensityReport, SparsityVerdict,
};
pub use error::{Error, Result};
pub use graph::{
    contract_matching, edges_conflict, split_by_drawing, Drawing, DrawingSplit, Graph, Matching,
    Multigraph, SimpleAdj, StrongMatching, VertexOrigin, WeightedEdges,
};
pub use oracle::{
    build_conflict_graph, exact_strong_coloring, exact_strong_index, verify_proper_edge,
    verify_proper_vertex, verify_strong, verify_strong_assignment, Violation,
};
pub use strong::{
    extend_at_vertex, partition_matching, rho_upper, strong_color_greedy, strong_color_ic,
    strong_color_mad, strong_color_oneplanar, strong_color_optimal, strong_color_split,
    CertifiedBound, ExtendOutcome, Method, PipelineParams, StrongColoring,
};
