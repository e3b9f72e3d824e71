//! Stress fixtures for the degree-8/9 route: dense circulants with minimum
//! degree 7 and more edges than the palette, so the pipeline must actually
//! peel (first through an adjacent pair of 7-vertices, then through
//! low-degree vertices) and re-insert every victim from its color lists.
//! The bounds the list sizes are asserted against inside the pipeline depend
//! only on local degrees, so they hold on these inputs whether or not a
//! 1-planar drawing exists.

mod common;

use matchlift_core::{
    exact_strong_index, is_ab_graph, strong_color_oneplanar, verify_strong, Error, Graph, Method,
    PipelineParams, Search,
};
use num_rational::Rational64;

/// Circulant on `n` vertices with the given positive offsets.
fn circulant(n: usize, offsets: &[usize], extra: &[(usize, usize)]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for &o in offsets {
            let w = (v + o) % n;
            let (a, b) = (v.min(w), v.max(w));
            if !edges.contains(&(a, b)) {
                edges.push((a, b));
            }
        }
    }
    for &e in extra {
        edges.push(e);
    }
    Graph::new(n, &edges).unwrap()
}

/// 7-regular circulant plus four disjoint chords: max degree 8, minimum
/// degree 7, 158 edges against a palette of 112.
fn stress_delta8() -> Graph {
    circulant(
        44,
        &[1, 2, 3, 22],
        &[(0, 4), (6, 10), (12, 16), (18, 22)],
    )
}

/// 7-regular circulant plus two chords at one vertex: max degree 9, minimum
/// degree 7, 177 edges against a palette of 126.
fn stress_delta9() -> Graph {
    circulant(50, &[1, 2, 3, 25], &[(0, 4), (0, 8)])
}

#[test]
fn stress_fixtures_have_the_intended_shape() {
    let g8 = stress_delta8();
    assert_eq!(g8.max_degree(), 8);
    assert_eq!(g8.min_degree(), 7);
    assert!(g8.edge_count() > 14 * 8);
    let g9 = stress_delta9();
    assert_eq!(g9.max_degree(), 9);
    assert_eq!(g9.min_degree(), 7);
    assert!(g9.edge_count() > 14 * 9);
    // Both must clear the hereditary density gate the pipeline applies.
    for g in [&g8, &g9] {
        assert!(is_ab_graph(
            &g.weighted_view(),
            Rational64::from_integer(4),
            Rational64::from_integer(8),
            3
        )
        .unwrap()
        .holds);
    }
}

#[test]
fn peeling_route_colors_the_delta8_fixture() {
    let g = stress_delta8();
    let c = strong_color_oneplanar(&g, None, &PipelineParams::default()).unwrap();
    assert_eq!(c.method, Method::OnePlanar);
    assert!(verify_strong(&g, &c).is_empty());
    assert!(c.color_count <= 14 * 8);
    assert_eq!(c.certified_bound.as_ref().unwrap().formula, "14*Delta");
}

#[test]
fn peeling_route_colors_the_delta9_fixture() {
    let g = stress_delta9();
    let c = strong_color_oneplanar(&g, None, &PipelineParams::default()).unwrap();
    assert!(verify_strong(&g, &c).is_empty());
    assert!(c.color_count <= 14 * 9);
}

/// Palette overrides stay honest: a palette too small for the counting
/// argument makes the extension fail loudly instead of miscoloring.
#[test]
fn tiny_palette_override_fails_cleanly() {
    let g = stress_delta8();
    let params = PipelineParams {
        palette: Some(20),
        ..PipelineParams::default()
    };
    match strong_color_oneplanar(&g, None, &params) {
        Err(Error::ExtensionFailed { .. }) => (),
        Ok(c) => {
            // A 20-color palette can only succeed if valid.
            assert!(verify_strong(&g, &c).is_empty());
            assert!(c.color_count <= 20);
        }
        Err(other) => panic!("unexpected error {other}"),
    }
}

/// Small promised-1-planar inputs stay above the exact index.
#[test]
fn oneplanar_respects_oracle_floor_on_small_inputs() {
    let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let c = strong_color_oneplanar(&star, None, &PipelineParams::default()).unwrap();
    assert!(verify_strong(&star, &c).is_empty());
    assert_eq!(exact_strong_index(&star, 1 << 22), Search::Found(4));
    assert_eq!(c.color_count, 4);
}
