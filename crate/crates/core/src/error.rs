use num_rational::Rational64;
use thiserror::Error;

/// Errors raised on invalid inputs. Search exhaustion is not an error; see
/// [`crate::coloring::Search`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("edge {edge} out of range (edge count {edge_count})")]
    InvalidEdge { edge: usize, edge_count: usize },
    #[error("loop at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge pair must name two distinct edges, got {edge} twice")]
    NotDistinctEdges { edge: usize },
    #[error("edges {e} and {f} share vertex {vertex}: not a matching")]
    NotAMatching { e: usize, f: usize, vertex: usize },
    #[error("edges {e} and {f} conflict: not a strong matching")]
    NotAStrongMatching { e: usize, f: usize },
    #[error("edge {edge} appears in more than one crossing pair")]
    CrossingEdgeReused { edge: usize },
    #[error("crossing edges {e} and {f} share vertex {vertex}")]
    CrossingSharesEndpoint { e: usize, f: usize, vertex: usize },
    #[error("coloring has {got} entries, expected {expected}")]
    ColoringSizeMismatch { expected: usize, got: usize },
    #[error("vertices {u} and {v} are adjacent but both have color {color}")]
    ImproperVertexColoring { u: usize, v: usize, color: usize },
    #[error("not bipartite: odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },
    #[error("target {k} is below the maximum degree {max_degree}")]
    TargetBelowMaxDegree { k: usize, max_degree: usize },
    #[error("color budget must be at least 1")]
    ZeroColorBudget,
    #[error("sparsity slope a = {a} must be at least 1")]
    SparsitySlopeTooSmall { a: Rational64 },
    #[error("sparsity offset b = {b} must be nonnegative")]
    SparsityOffsetNegative { b: Rational64 },
    #[error("min_vertices must be at least 1")]
    ZeroMinVertices,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("palette must be positive")]
    EmptyPalette,
    #[error("partial coloring gives conflicting edges {e} and {f} the same color")]
    InvalidPartialColoring { e: usize, f: usize },
    #[error("edges at vertex {vertex} must be uncolored before extension, edge {edge} is not")]
    VertexNotUncolored { vertex: usize, edge: usize },
    #[error("density witness {witness:?} is too dense for a 1-planar graph")]
    NotOnePlanarDensity { witness: Vec<usize> },
    #[error("density witness {witness:?} is too dense for a planar graph")]
    NotPlanarDensity { witness: Vec<usize> },
    #[error("minimum degree 7 without two adjacent 7-vertices: not 1-planar")]
    NotOnePlanarPeel,
    #[error("could not extend the coloring at vertex {vertex}")]
    ExtensionFailed { vertex: usize },
    #[error("vertex {vertex} is incident with more than one crossing edge")]
    NotIcPlanar { vertex: usize },
    #[error("{edges} edges on {vertices} vertices, an optimal 1-planar graph has exactly {expected}")]
    NotOptimal {
        edges: usize,
        vertices: usize,
        expected: i64,
    },
    #[error("vertex {vertex} has {non_crossing} non-crossing and {crossing} crossing edges, expected equal")]
    NotBalanced {
        vertex: usize,
        non_crossing: usize,
        crossing: usize,
    },
    #[error("non-crossing subgraph is not bipartite: odd cycle {cycle:?}")]
    SplitNotBipartite { cycle: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, Error>;
