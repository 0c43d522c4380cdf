// SPDX-License-Identifier: Apache-2.0

//! Condition (Y): for every natural `n` and every infinite path `p` there are
//! an initial subpath `x` of `p` and a path `y` with `r(y) = r(x)` and
//! `|y| − |x| = n`.
//!
//! On a finite graph every infinite path meets a vertex on a cycle, and paths
//! of every length end there, so the condition always holds. The deciders
//! below do not rely on this; it serves as a test oracle.

use grading::{Status, Verdict};

use crate::lengths::{common_threshold_and_period, in_length_set, EventuallyPeriodicSet};
use crate::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YMode {
    Exact,
    /// Checks `n ≤ n_max` against path prefixes of length `≤ k_max`.
    Bounded {
        n_max: usize,
        k_max: usize,
    },
}

/// An infinite path `prefix · cycle^ω` along which `|x| + n ∉ L(r(x))` for
/// every initial subpath `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lasso {
    pub n: usize,
    pub start: usize,
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl Lasso {
    fn witness(&self, g: &Graph) -> Vec<String> {
        let ids = |es: &[usize]| es.iter().map(|&e| g.edge(e).id.clone()).collect::<Vec<_>>().join(" ");
        vec![
            format!("n={}", self.n),
            format!("start={}", g.vertex_name(self.start)),
            format!("prefix={}", ids(&self.prefix)),
            format!("cycle={}", ids(&self.cycle)),
        ]
    }
}

pub fn condition_y(g: &Graph, mode: YMode) -> Verdict {
    match mode {
        YMode::Exact => condition_y_exact(g),
        YMode::Bounded { n_max, k_max } => condition_y_bounded(g, n_max, k_max),
    }
}

struct Product<'a> {
    g: &'a Graph,
    lengths: Vec<EventuallyPeriodicSet>,
    threshold: usize,
    period: usize,
}

impl<'a> Product<'a> {
    fn new(g: &'a Graph) -> Self {
        Self::with_lengths(g, (0..g.vertex_count()).map(|v| in_length_set(g, v)).collect())
    }

    fn with_lengths(g: &'a Graph, lengths: Vec<EventuallyPeriodicSet>) -> Self {
        let (threshold, period) = common_threshold_and_period(&lengths);
        Self { g, lengths, threshold, period }
    }

    /// Counter values run through `0..T+P`; past `T` the counter stands for
    /// the residue of `k` modulo `P`.
    fn counters(&self) -> usize {
        self.threshold + self.period
    }

    fn next(&self, c: usize) -> usize {
        if c + 1 < self.counters() {
            c + 1
        } else {
            self.threshold
        }
    }

    fn state(&self, v: usize, c: usize) -> usize {
        v * self.counters() + c
    }

    /// Bad-state lasso for one `n`: prune bad states without a bad successor
    /// until stable, then walk from a surviving `(v, 0)`.
    fn lasso(&self, n: usize) -> Option<Lasso> {
        let g = self.g;
        let width = self.counters();
        let bad = |v: usize, c: usize| !self.lengths[v].contains(c + n);
        let mut live = vec![false; g.vertex_count() * width];
        for v in 0..g.vertex_count() {
            for c in 0..width {
                live[self.state(v, c)] = bad(v, c);
            }
        }
        loop {
            let mut changed = false;
            for v in 0..g.vertex_count() {
                for c in 0..width {
                    let s = self.state(v, c);
                    if live[s] && !g.out_edges(v).iter().any(|&e| live[self.state(g.edge(e).rng, self.next(c))]) {
                        live[s] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let start = (0..g.vertex_count()).find(|&v| live[self.state(v, 0)])?;
        let mut visited: Vec<(usize, usize)> = vec![(start, 0)];
        let mut taken: Vec<usize> = Vec::new();
        loop {
            let (v, c) = *visited.last().expect("nonempty");
            let e = *g
                .out_edges(v)
                .iter()
                .find(|&&e| live[self.state(g.edge(e).rng, self.next(c))])
                .expect("live state has a live successor");
            let to = (g.edge(e).rng, self.next(c));
            taken.push(e);
            if let Some(pos) = visited.iter().position(|&s| s == to) {
                return Some(Lasso { n, start, prefix: taken[..pos].to_vec(), cycle: taken[pos..].to_vec() });
            }
            visited.push(to);
        }
    }
}

/// The first `n` for which condition (Y) fails, with a lasso witness.
pub fn lasso_for(g: &Graph) -> Option<Lasso> {
    let product = Product::new(g);
    (0..product.counters()).find_map(|n| product.lasso(n))
}

/// The lasso search for one `n` against an arbitrary family of length sets
/// in place of `L(v)`, one per vertex.
pub fn lasso_against(g: &Graph, lengths: Vec<EventuallyPeriodicSet>, n: usize) -> Option<Lasso> {
    assert_eq!(lengths.len(), g.vertex_count(), "one length set per vertex");
    Product::with_lengths(g, lengths).lasso(n)
}

pub fn condition_y_exact(g: &Graph) -> Verdict {
    if g.infinite_path_vertices().is_empty() {
        return Verdict::holds("no infinite paths, so condition (Y) holds vacuously");
    }
    let product = Product::new(g);
    let (t, p) = (product.threshold, product.period);
    match (0..product.counters()).find_map(|n| product.lasso(n)) {
        None => Verdict::holds(format!("no bad lasso for n < T+P (T={t}, P={p}); larger n repeat modulo P"))
            .with_bound("threshold", t)
            .with_bound("period", p),
        Some(lasso) => {
            let w = lasso.witness(g);
            Verdict::fails(format!("bad lasso for n = {}: no initial subpath x has |x| + n ∈ L(r(x))", lasso.n), w)
                .with_bound("threshold", t)
                .with_bound("period", p)
        }
    }
}

/// Whether paths of length `m` end at each vertex, for `m ≤ max_len`, by
/// direct iteration.
fn reachable_lengths(g: &Graph, max_len: usize) -> Vec<Vec<bool>> {
    let mut table = vec![vec![true; g.vertex_count()]];
    for m in 1..=max_len {
        let row = (0..g.vertex_count()).map(|w| g.in_edges(w).iter().any(|&e| table[m - 1][g.edge(e).src])).collect();
        table.push(row);
    }
    table
}

/// Condition (Y) for one `n`, checked on every prefix of length `k_max` of an
/// infinite path. `Holds` is sound for this `n`; a prefix with no witness
/// gives `Unknown` since a longer initial subpath might still work.
pub fn condition_y_bounded_for(g: &Graph, n: usize, k_max: usize) -> (Status, Option<Vec<usize>>) {
    let infinite = g.infinite_path_vertices();
    let ends = reachable_lengths(g, k_max + n);
    let good = |v: usize, depth: usize| ends[depth + n][v];
    // escapes[depth][v]: some continuation of length k_max − depth from v
    // stays within infinite-path vertices and never meets a witness.
    let mut escapes = vec![vec![false; g.vertex_count()]; k_max + 1];
    for depth in (0..=k_max).rev() {
        for v in 0..g.vertex_count() {
            escapes[depth][v] = infinite.contains(&v)
                && !good(v, depth)
                && (depth == k_max || g.out_edges(v).iter().any(|&e| escapes[depth + 1][g.edge(e).rng]));
        }
    }
    let Some(start) = (0..g.vertex_count()).find(|&v| escapes[0][v]) else {
        return (Status::Holds, None);
    };
    let mut path = Vec::new();
    let mut at = start;
    for depth in 0..k_max {
        let e = *g.out_edges(at).iter().find(|&&e| escapes[depth + 1][g.edge(e).rng]).expect("escape continues");
        path.push(e);
        at = g.edge(e).rng;
    }
    (Status::Unknown, Some(path))
}

pub fn condition_y_bounded(g: &Graph, n_max: usize, k_max: usize) -> Verdict {
    if g.infinite_path_vertices().is_empty() {
        return Verdict::holds("no infinite paths, so condition (Y) holds vacuously");
    }
    for n in 0..=n_max {
        if let (Status::Unknown, Some(path)) = condition_y_bounded_for(g, n, k_max) {
            let ids = path.iter().map(|&e| g.edge(e).id.clone()).collect::<Vec<_>>().join(" ");
            return Verdict::unknown(format!("no witness for n = {n} within prefixes of length {k_max}"))
                .with_witness(vec![format!("n={n}"), format!("prefix={ids}")])
                .with_bound("n_max", n_max)
                .with_bound("k_max", k_max);
        }
    }
    Verdict::holds(format!("every infinite path has a witness within {k_max} edges for all n ≤ {n_max}"))
        .fragment()
        .with_bound("n_max", n_max)
        .with_bound("k_max", k_max)
}
