// SPDX-License-Identifier: Apache-2.0

//! Small graphs used throughout the tests and the command line.

use rand::Rng;

use crate::Graph;

/// One vertex `v` with one loop `e`.
pub fn loop_graph() -> Graph {
    Graph::from_lists(&["v"], &[("e", "v", "v")]).expect("loop graph")
}

/// One vertex `v` with loops `e` and `f`.
pub fn two_loops() -> Graph {
    Graph::from_lists(&["v"], &[("e", "v", "v"), ("f", "v", "v")]).expect("two loops")
}

/// A single edge `e: v → w`.
pub fn single_edge() -> Graph {
    Graph::from_lists(&["v", "w"], &[("e", "v", "w")]).expect("single edge")
}

/// `e: v → w`, `f: w → v`.
pub fn two_cycle() -> Graph {
    Graph::from_lists(&["v", "w"], &[("e", "v", "w"), ("f", "w", "v")]).expect("two-cycle")
}

/// The two-cycle with an extra edge `g: u → v` from a source.
pub fn two_cycle_with_tail() -> Graph {
    Graph::from_lists(&["u", "v", "w"], &[("g", "u", "v"), ("e", "v", "w"), ("f", "w", "v")])
        .expect("two-cycle with tail")
}

/// `u` with two edges `e: u → v`, `f: u → w`.
pub fn fork() -> Graph {
    Graph::from_lists(&["u", "v", "w"], &[("e", "u", "v"), ("f", "u", "w")]).expect("fork")
}

/// A loop at `v` feeding a sink: `e: v → v`, `f: v → w`.
pub fn loop_with_exit() -> Graph {
    Graph::from_lists(&["v", "w"], &[("e", "v", "v"), ("f", "v", "w")]).expect("loop with exit")
}

/// A random graph on `1..=max_vertices` vertices `v0, v1, …` with at most
/// `max_edges` edges `e0, e1, …`.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = (0..m)
        .map(|k| (format!("e{k}"), vertices[rng.gen_range(0..n)].clone(), vertices[rng.gen_range(0..n)].clone()))
        .collect();
    Graph::new(vertices, edges).expect("random graph")
}
