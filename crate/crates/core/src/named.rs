//! Small named graphs used throughout the tests and the CLI.

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n).expect("named graph too large");
    for (u, v) in edges {
        g.add_edge(u, v).expect("named graph edge");
    }
    g
}

/// `C_n` on `0-1-...-(n-1)-0`; `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n` on `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn edgeless(n: usize) -> Graph {
    build(n, [])
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    build(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
}

/// Outer 5-cycle on `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Mycielski's construction: originals `0..n`, shadows `n..2n` (shadow of
/// `v` adjacent to the neighbours of `v`), apex `2n` adjacent to all shadows.
/// Preserves triangle-freeness and raises the chromatic number by one.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    build(2 * n + 1, edges)
}

/// The 11-vertex Grötzsch graph, `mycielskian(C5)`.
pub fn grotzsch() -> Graph {
    mycielskian(&cycle(5))
}
