// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use grade_group::{GradeGroup, GroupElement};
use grading::Status;
use graphs::fixtures::{
    fork, loop_graph, loop_with_exit, random_graph, single_edge, two_cycle, two_cycle_with_tail, two_loops,
};
use graphs::{
    condition_y, condition_y_bounded_for, covering_graph, enumerate_paths, in_length_set, lasso_against,
    locally_strong_condition, lpa_strongly_graded_verdict, out_length_sets, structural_report, EventuallyPeriodicSet,
    Graph, GraphError, WeightMap, YMode,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn names(g: &Graph, paths: &[graphs::Path]) -> Vec<String> {
    paths.iter().map(|p| g.render_path(p)).collect()
}

/// Whether a path of each length `≤ max` ends at `w`, by iterating the
/// in-edge relation length by length.
fn brute_in_lengths(g: &Graph, w: usize, max: usize) -> Vec<bool> {
    reach_table(g, None, max).into_iter().map(|row| row[w]).collect()
}

#[test]
fn structural_examples() {
    let r = structural_report(&loop_graph());
    assert!(r.sinks.is_empty() && r.sources.is_empty() && r.is_row_finite && r.has_cycles);
    let r = structural_report(&single_edge());
    assert_eq!(r.sinks, vec!["w"]);
    assert_eq!(r.sources, vec!["v"]);
    assert_eq!(r.regular_vertices, vec!["v"]);
    assert!(!r.has_cycles);
    assert!(structural_report(&Graph::empty()).is_empty);
}

#[test]
fn json_parsing_and_validation() {
    let g = Graph::from_json(&json!({"vertices": ["v", "w"], "edges": [{"id": "e", "src": "v", "rng": "w"}]})).unwrap();
    assert_eq!(g, single_edge());
    assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    assert!(matches!(
        Graph::from_json(&json!({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "rng": "x"}]})),
        Err(GraphError::UnknownVertex { .. })
    ));
    assert!(matches!(Graph::from_json(&json!({"vertices": ["v", "v"]})), Err(GraphError::DuplicateId(_))));
    assert!(matches!(
        Graph::from_json(&json!({"vertices": ["v"], "edges": [{"id": "v", "src": "v", "rng": "v"}]})),
        Err(GraphError::DuplicateId(_))
    ));
    let weighted = json!({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "rng": "v"}], "weights": {"e": 2}});
    let g = Graph::from_json(&weighted).unwrap();
    let w = WeightMap::from_json(&g, &weighted, &GradeGroup::Cyclic(3)).unwrap();
    assert_eq!(w.get(0), &GroupElement::Residue(2));
}

#[test]
fn path_enumeration_examples() {
    let g = loop_graph();
    assert_eq!(names(&g, &enumerate_paths(&g, None, 2)), vec!["v", "e", "ee"]);
    let g = single_edge();
    assert_eq!(names(&g, &enumerate_paths(&g, None, 2)), vec!["v", "w", "e"]);
    assert!(enumerate_paths(&Graph::empty(), None, 3).is_empty());
    let g = fork();
    assert_eq!(names(&g, &enumerate_paths(&g, Some(0), 5)), vec!["u", "e", "f"]);
}

#[test]
fn path_algebra() {
    let g = two_cycle();
    let ef = g.path_of_ids(&["e", "f"]).unwrap();
    let e = g.path_of_ids(&["e"]).unwrap();
    let f = g.path_of_ids(&["f"]).unwrap();
    assert_eq!(e.concat(&f), Some(ef.clone()));
    assert_eq!(f.concat(&f), None);
    assert_eq!(ef.strip_prefix(&e), Some(f.clone()));
    assert_eq!(ef.strip_prefix(&graphs::Path::vertex(0)), Some(ef.clone()));
    assert_eq!(ef.strip_prefix(&f), None);
    assert!(g.path_of_ids(&["e", "e"]).is_err());
}

#[test]
fn eventually_periodic_sets_are_canonical() {
    // Multiples of 3, recorded with a spurious threshold and period 6.
    let bits = [true, false, false, true, false, false, true, false, false];
    let s = EventuallyPeriodicSet::from_bits(&bits, 3, 6);
    assert_eq!((s.threshold(), s.period()), (0, 3));
    // 0, 1, 2 and the multiples of 3: the threshold cannot drop below 3.
    let head = EventuallyPeriodicSet::from_bits(&[true, true, true, true, false, false], 3, 3);
    assert_eq!((head.threshold(), head.period()), (3, 3));
    assert!(head.contains(2) && !head.contains(5));
    assert!(s.contains(0) && s.contains(3) && s.contains(300) && !s.contains(301));
    // A longer recorded prefix describing the same set gives the same value.
    let again = EventuallyPeriodicSet::from_bits(&[true, false, false, true, false, false, true, false, false], 0, 9);
    assert_eq!(s, again);
    assert!(EventuallyPeriodicSet::empty().is_empty());
    assert!(EventuallyPeriodicSet::naturals().contains(12345));
}

#[test]
fn in_length_set_examples() {
    let all = in_length_set(&loop_graph(), 0);
    assert_eq!((all.threshold(), all.period()), (0, 1));
    assert_eq!(all.residues(), &BTreeSet::from([0]));

    let g = single_edge();
    let w = in_length_set(&g, 1);
    assert_eq!(w.members_below(10), vec![0, 1]);
    assert!(w.is_finite());

    // Every length ends at a vertex of the two-cycle; closed walks at v have
    // even length.
    let g = two_cycle();
    assert_eq!(in_length_set(&g, 0), EventuallyPeriodicSet::naturals());
    let closed = &out_length_sets(&g, 0)[0];
    assert_eq!(closed.members_below(9), vec![0, 2, 4, 6, 8]);
    assert_eq!(closed.period(), 2);
}

#[test]
fn length_sets_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<Graph> =
        vec![loop_graph(), two_loops(), single_edge(), two_cycle(), two_cycle_with_tail(), fork(), loop_with_exit()];
    graphs.extend((0..20).map(|_| random_graph(&mut rng, 5, 7)));
    for g in &graphs {
        for w in 0..g.vertex_count() {
            let set = in_length_set(g, w);
            let horizon = 2 * (set.threshold() + set.period());
            let brute = brute_in_lengths(g, w, horizon);
            for (k, &hit) in brute.iter().enumerate() {
                assert_eq!(set.contains(k), hit, "{g}: L({}) at {k}", g.vertex_name(w));
            }
        }
    }
}

#[test]
fn condition_y_examples() {
    for g in [loop_graph(), two_loops(), single_edge(), Graph::empty(), two_cycle_with_tail(), loop_with_exit()] {
        let exact = condition_y(&g, YMode::Exact);
        assert_eq!(exact.status, Status::Holds, "{g}");
        assert!(exact.exact);
        let bounded = condition_y(&g, YMode::Bounded { n_max: 6, k_max: 12 });
        assert_eq!(bounded.status, Status::Holds, "{g}");
    }
    assert!(condition_y(&single_edge(), YMode::Exact).certificate.contains("vacuously"));
}

#[test]
fn lasso_search_finds_planted_failures() {
    // Against a fake length family {0} at every vertex, n = 1 is never met
    // and the loop itself is the bad lasso.
    let g = loop_graph();
    let only_zero = EventuallyPeriodicSet::from_bits(&[true, false], 1, 1);
    let lasso = lasso_against(&g, vec![only_zero.clone()], 1).expect("bad lasso");
    assert_eq!(lasso.cycle, vec![0]);
    assert!(lasso_against(&g, vec![only_zero], 0).is_none());

    // Even lengths at both vertices: with n = 1 every odd position is good.
    let g = two_cycle();
    let evens = EventuallyPeriodicSet::from_bits(&[true, false], 0, 2);
    assert!(lasso_against(&g, vec![evens.clone(), evens.clone()], 1).is_none());
    // Evens at v and odds at w: starting at v, k + 1 always has the wrong parity.
    let odds = EventuallyPeriodicSet::from_bits(&[false, true], 0, 2);
    let lasso = lasso_against(&g, vec![evens, odds], 1).expect("bad lasso");
    assert_eq!(lasso.start, 0);
    assert_eq!(lasso.cycle.len(), 2);
}

#[test]
fn exact_and_bounded_condition_y_agree_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 8, 16);
        let exact = condition_y(&g, YMode::Exact);
        // Every infinite path of a finite graph meets a cycle vertex, where
        // paths of every length end.
        assert!(exact.is_holds(), "{g}: {exact}");
        for n in 0..=6 {
            let (status, _) = condition_y_bounded_for(&g, n, 12);
            assert_ne!(status, Status::Fails);
        }
        let bounded = condition_y(&g, YMode::Bounded { n_max: 6, k_max: 12 });
        assert!(!bounded.is_fails());
    }
}

/// `reach[m][w]`: a path of length `m` from `v` (or from anywhere, when
/// `v` is `None`) ends at `w`. Plain dynamic programming over lengths.
fn reach_table(g: &Graph, v: Option<usize>, max: usize) -> Vec<Vec<bool>> {
    let mut table = vec![(0..g.vertex_count()).map(|w| v.is_none_or(|v| v == w)).collect::<Vec<_>>()];
    for m in 1..=max {
        let row = (0..g.vertex_count()).map(|w| g.in_edges(w).iter().any(|&e| table[m - 1][g.edge(e).src])).collect();
        table.push(row);
    }
    table
}

/// Differences `|x| − |y|` with `s(x) = v`, `r(x) = r(y)`, paths up to `max`.
fn brute_differences(g: &Graph, v: usize, max: usize) -> BTreeSet<i64> {
    let from_v = reach_table(g, Some(v), max);
    let anywhere = reach_table(g, None, max);
    let mut out = BTreeSet::new();
    for w in 0..g.vertex_count() {
        for a in (0..=max).filter(|&a| from_v[a][w]) {
            for b in (0..=max).filter(|&b| anywhere[b][w]) {
                out.insert(a as i64 - b as i64);
            }
        }
    }
    out
}

#[test]
fn locally_strong_condition_examples() {
    assert!(locally_strong_condition(&loop_graph()).is_holds());
    assert!(locally_strong_condition(&two_cycle_with_tail()).is_holds());
    let v = locally_strong_condition(&fork());
    assert!(v.is_fails());
    let n: i64 = v.witness[1].parse().unwrap();
    assert_eq!(n.abs(), 1);
    let vertex = fork().vertex_index(&v.witness[0]).unwrap();
    assert!(!brute_differences(&fork(), vertex, 6).contains(&n));
}

#[test]
fn locally_strong_condition_matches_cycle_reachability() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 6, 9);
        let verdict = locally_strong_condition(&g);
        let every_vertex_reaches_a_cycle = g.infinite_path_vertices().len() == g.vertex_count();
        assert_eq!(verdict.is_holds(), every_vertex_reaches_a_cycle, "{g}");
        if verdict.is_fails() {
            let v = g.vertex_index(&verdict.witness[0]).unwrap();
            let n: i64 = verdict.witness[1].parse().unwrap();
            let seen = brute_differences(&g, v, g.vertex_count() + n.unsigned_abs() as usize + 2);
            assert!(!seen.contains(&n));
            // Nothing smaller in absolute value is missing at this vertex.
            assert!((-(n.abs()) + 1..n.abs()).all(|m| seen.contains(&m)), "{g}: {n}");
        }
    }
}

#[test]
fn covering_examples() {
    let g = loop_graph();
    let window: Vec<GroupElement> = [-1, 0, 1].map(GroupElement::Int).to_vec();
    let cov = covering_graph(&g, &WeightMap::unit(&g), &window).unwrap();
    assert_eq!(cov.graph.vertex_count(), 3);
    let rendered: BTreeSet<String> = cov
        .graph
        .edges()
        .iter()
        .map(|e| format!("{}:{}→{}", e.id, cov.graph.vertex_name(e.src), cov.graph.vertex_name(e.rng)))
        .collect();
    assert_eq!(rendered, BTreeSet::from(["e_1:v_1→v_0".to_string(), "e_0:v_0→v_-1".to_string()]));
    assert_eq!(cov.dropped, vec!["e_-1"]);

    let g = two_loops();
    let cov = covering_graph(&g, &WeightMap::unit(&g), &window).unwrap();
    let between_1_and_0 = cov
        .graph
        .edges()
        .iter()
        .filter(|e| cov.graph.vertex_name(e.src) == "v_1" && cov.graph.vertex_name(e.rng) == "v_0")
        .count();
    assert_eq!(between_1_and_0, 2);

    let z2 = GradeGroup::Cyclic(2);
    for g in [two_cycle_with_tail(), two_loops(), fork()] {
        let w = WeightMap::constant(&g, z2.clone(), GroupElement::Residue(1)).unwrap();
        let cov = covering_graph(&g, &w, &z2.enumerate(0)).unwrap();
        assert_eq!(cov.graph.vertex_count(), 2 * g.vertex_count());
        assert_eq!(cov.graph.edge_count(), 2 * g.edge_count());
        assert!(cov.dropped.is_empty());
        assert!(cov.weights.as_slice().iter().all(|x| *x == GroupElement::Residue(1)));
    }
    assert_eq!(
        covering_graph(&loop_graph(), &WeightMap::unit(&loop_graph()), &[]).unwrap_err(),
        GraphError::EmptyWindow
    );
}

#[test]
fn lpa_examples() {
    assert!(lpa_strongly_graded_verdict(&loop_graph()).is_holds());
    let v = lpa_strongly_graded_verdict(&single_edge());
    assert!(v.is_fails());
    assert_eq!(v.witness, vec!["w"]);
    assert!(lpa_strongly_graded_verdict(&Graph::empty()).is_fails());
    assert!(lpa_strongly_graded_verdict(&loop_with_exit()).is_fails());
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..7).prop_map(move |pairs| {
            let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let edges = pairs
                .iter()
                .enumerate()
                .map(|(k, &(s, r))| (format!("e{k}"), vertices[s].clone(), vertices[r].clone()))
                .collect();
            Graph::new(vertices, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_coverings_preserve_having_no_sources(g in graph_strategy(), weight in 0u64..3) {
        let z3 = GradeGroup::Cyclic(3);
        let w = WeightMap::constant(&g, z3.clone(), GroupElement::Residue(weight)).unwrap();
        let cov = covering_graph(&g, &w, &z3.enumerate(0)).unwrap();
        prop_assert!(cov.dropped.is_empty());
        let no_sources = |h: &Graph| (0..h.vertex_count()).all(|v| !h.is_source(v));
        if no_sources(&g) {
            prop_assert!(no_sources(&cov.graph));
        }
    }

    #[test]
    fn out_length_sets_match_enumeration(g in graph_strategy()) {
        for v in 0..g.vertex_count() {
            let outs = out_length_sets(&g, v);
            let paths = enumerate_paths(&g, Some(v), 5);
            for (w, set) in outs.iter().enumerate() {
                for k in 0..=5 {
                    let brute = paths.iter().any(|p| p.len() == k && p.range() == w);
                    prop_assert_eq!(set.contains(k), brute);
                }
            }
        }
    }
}
