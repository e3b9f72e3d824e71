//! Instance builders shared by the criterion benchmarks.

use matchlift_cli::gen::{generate, Family, Instance, QuadBase};
use matchlift_core::Graph;

pub fn random_planar(n: usize, seed: u64) -> Instance {
    generate(&Family::RandomPlanar { n }, seed).expect("valid parameters")
}

pub fn random_simple(n: usize, edges: usize, seed: u64) -> Instance {
    generate(&Family::RandomSimple { n, edges }, seed).expect("valid parameters")
}

pub fn quad_optimal_wheel(k: usize) -> Instance {
    generate(
        &Family::QuadOptimal {
            base: QuadBase::PseudoDoubleWheel { k },
        },
        0,
    )
    .expect("valid parameters")
}

pub fn h_delta(delta: usize) -> Instance {
    generate(&Family::HDelta { delta }, 0).expect("valid parameters")
}

/// Degree-9 circulant with minimum degree 7 and more edges than the 126
/// color palette, so the 1-planar pipeline takes the peel-and-extend route.
pub fn peeling_circulant() -> Graph {
    let n = 50;
    let mut edges = Vec::new();
    for v in 0..n {
        for o in [1usize, 2, 3, 25] {
            let w = (v + o) % n;
            let key = (v.min(w), v.max(w));
            if !edges.contains(&key) {
                edges.push(key);
            }
        }
    }
    edges.push((0, 4));
    edges.push((0, 8));
    Graph::new(n, &edges).expect("circulant is simple")
}
