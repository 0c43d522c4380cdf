// SPDX-License-Identifier: Apache-2.0

use gis::{
    gis_enumerate, gis_inverse_and_degree, gis_mul, idempotent_order_report, natural_grading_verdicts,
    strong_mod_n_verdict, zn_factorization, GisBackend, GisElement, GisGrading, GradedGis,
};
use grade_group::{GradeGroup, GroupElement};
use grading::{check_grading, Bounds, GradedSemigroup};
use graphs::fixtures::{fork, loop_graph, loop_with_exit, single_edge, two_cycle, two_cycle_with_tail, two_loops};
use graphs::{Graph, Path, WeightMap};
use semigroup_core::Semigroup;

fn fixtures() -> Vec<Graph> {
    vec![loop_graph(), two_loops(), single_edge(), two_cycle(), two_cycle_with_tail(), fork(), loop_with_exit()]
}

fn edge(g: &Graph, id: &str) -> GisElement {
    GisElement::path(g.path_of_ids(&[id]).unwrap())
}

fn edge_inv(g: &Graph, id: &str) -> GisElement {
    GisElement::path_inverse(g.path_of_ids(&[id]).unwrap())
}

/// Letters of the free presentation of 𝒮(E).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Letter {
    Vertex(usize),
    Edge(usize),
    Inv(usize),
}

fn letters(a: &GisElement) -> Option<Vec<Letter>> {
    let GisElement::Pair(x, y) = a else { return None };
    if x.is_vertex() && y.is_vertex() {
        return Some(vec![Letter::Vertex(x.source())]);
    }
    let mut w: Vec<Letter> = x.edges().iter().map(|&e| Letter::Edge(e)).collect();
    w.extend(y.edges().iter().rev().map(|&e| Letter::Inv(e)));
    Some(w)
}

/// Reduces a word using only the defining relations: vertices are orthogonal
/// idempotents, `s(e)e = e = er(e)`, `r(e)e⁻¹ = e⁻¹ = e⁻¹s(e)`, and
/// `e⁻¹f = δ_{e,f} r(e)`. `None` is zero.
fn reduce(g: &Graph, mut word: Vec<Letter>) -> Option<Vec<Letter>> {
    use Letter::*;
    loop {
        let mut changed = false;
        for i in 0..word.len().saturating_sub(1) {
            let replacement: Option<Vec<Letter>> = match (word[i], word[i + 1]) {
                (Vertex(v), Vertex(w)) => (v == w).then(|| vec![Vertex(v)]),
                (Vertex(v), Edge(e)) => (g.edge(e).src == v).then(|| vec![Edge(e)]),
                (Edge(e), Vertex(v)) => (g.edge(e).rng == v).then(|| vec![Edge(e)]),
                (Vertex(v), Inv(e)) => (g.edge(e).rng == v).then(|| vec![Inv(e)]),
                (Inv(e), Vertex(v)) => (g.edge(e).src == v).then(|| vec![Inv(e)]),
                (Inv(e), Edge(f)) => (e == f).then(|| vec![Vertex(g.edge(e).rng)]),
                (Edge(e), Edge(f)) => {
                    if g.edge(e).rng != g.edge(f).src {
                        return None;
                    }
                    continue;
                }
                (Inv(e), Inv(f)) => {
                    if g.edge(e).src != g.edge(f).rng {
                        return None;
                    }
                    continue;
                }
                (Edge(e), Inv(f)) => {
                    if g.edge(e).rng != g.edge(f).rng {
                        return None;
                    }
                    continue;
                }
            };
            {
                let r = replacement?;
                word.splice(i..i + 2, r);
                changed = true;
                break;
            }
        }
        if !changed {
            return Some(word);
        }
    }
}

fn from_letters(g: &Graph, word: &[Letter]) -> GisElement {
    if let [Letter::Vertex(v)] = word {
        return GisElement::vertex(*v);
    }
    let pos: Vec<usize> = word.iter().filter_map(|l| if let Letter::Edge(e) = l { Some(*e) } else { None }).collect();
    let neg: Vec<usize> =
        word.iter().rev().filter_map(|l| if let Letter::Inv(e) = l { Some(*e) } else { None }).collect();
    let end = |es: &[usize], other: &[usize]| es.last().or(other.last()).map(|&e| g.edge(e).rng).unwrap();
    let x = match pos.first() {
        Some(&e) => g.path(g.edge(e).src, pos.clone()).unwrap(),
        None => Path::vertex(end(&neg, &pos)),
    };
    let y = match neg.first() {
        Some(&e) => g.path(g.edge(e).src, neg.clone()).unwrap(),
        None => Path::vertex(end(&pos, &neg)),
    };
    GisElement::pair(x, y).unwrap()
}

fn oracle_mul(g: &Graph, a: &GisElement, b: &GisElement) -> GisElement {
    let (Some(mut wa), Some(wb)) = (letters(a), letters(b)) else { return GisElement::Zero };
    wa.extend(wb);
    reduce(g, wa).map_or(GisElement::Zero, |w| from_letters(g, &w))
}

#[test]
fn multiplication_examples() {
    let g = loop_graph();
    let (e, e_inv, v) = (edge(&g, "e"), edge_inv(&g, "e"), GisElement::vertex(0));
    assert_eq!(gis_mul(&e_inv, &e), v);
    let eei = gis_mul(&e, &e_inv);
    assert_eq!(eei, GisElement::Pair(g.path_of_ids(&["e"]).unwrap(), g.path_of_ids(&["e"]).unwrap()));
    assert_eq!(gis_mul(&eei, &eei), eei);

    let g = fork();
    assert_eq!(gis_mul(&edge_inv(&g, "e"), &edge(&g, "f")), GisElement::Zero);
    assert_eq!(gis_mul(&edge_inv(&g, "e"), &edge(&g, "e")), GisElement::vertex(1));
    let b = GisBackend::new(g.clone());
    assert_eq!(b.render(&gis_mul(&edge(&g, "e"), &edge_inv(&g, "e"))), "e*e^-1");
    assert_eq!(b.render(&edge_inv(&g, "f")), "f^-1");
}

#[test]
fn bicyclic_monoid_from_the_loop() {
    // a = e⁻¹, b = e with ab = 1 and ba ≠ 1.
    let g = loop_graph();
    let (a, b, one) = (edge_inv(&g, "e"), edge(&g, "e"), GisElement::vertex(0));
    assert_eq!(gis_mul(&a, &b), one);
    assert_ne!(gis_mul(&b, &a), one);
    for x in gis_enumerate(&GisBackend::new(g), 4).into_iter().skip(1) {
        assert_eq!(gis_mul(&one, &x), x);
        assert_eq!(gis_mul(&x, &one), x);
    }
}

#[test]
fn products_match_the_defining_relations() {
    for g in fixtures() {
        let b = GisBackend::new(g.clone());
        let elems = gis_enumerate(&b, 3);
        for x in &elems {
            for y in &elems {
                assert_eq!(gis_mul(x, y), oracle_mul(&g, x, y), "{g}: {} · {}", b.render(x), b.render(y));
            }
        }
    }
}

#[test]
fn associativity_within_size_three() {
    for g in fixtures() {
        let b = GisBackend::new(g.clone());
        let elems = gis_enumerate(&b, 3);
        for x in &elems {
            for y in &elems {
                let xy = gis_mul(x, y);
                if let GisElement::Pair(p, q) = &xy {
                    assert_eq!(p.range(), q.range());
                }
                for z in &elems {
                    assert_eq!(gis_mul(&xy, z), gis_mul(x, &gis_mul(y, z)), "{g}");
                }
            }
        }
    }
}

#[test]
fn enumeration_examples() {
    let b = GisBackend::new(loop_graph());
    let one: std::collections::BTreeSet<String> = gis_enumerate(&b, 1).iter().map(|a| b.render(a)).collect();
    assert_eq!(one, ["0", "v", "e", "e^-1"].map(String::from).into());
    let two: Vec<String> = gis_enumerate(&b, 2).iter().map(|a| b.render(a)).collect();
    assert_eq!(two.len(), 7);
    for name in ["e*e^-1", "ee", "ee^-1"] {
        assert!(two.contains(&name.to_string()), "{name} in {two:?}");
    }
    assert_eq!(gis_enumerate(&GisBackend::new(Graph::empty()), 5), vec![GisElement::Zero]);
    // An acyclic graph gives a finite semigroup, enumerated whole.
    let finite = GisBackend::new(single_edge());
    assert!(finite.is_finite());
    assert_eq!(finite.enumerate(0).len(), 1 + 2 + 3);
}

#[test]
fn degrees_and_inverses() {
    let g = loop_graph();
    let natural = GisGrading::Natural;
    let d = gis_inverse_and_degree(&edge(&g, "e"), &natural).unwrap();
    assert_eq!(d.degree, GroupElement::Int(1));
    assert_eq!(d.inverse, edge_inv(&g, "e"));
    assert_eq!(gis_inverse_and_degree(&edge_inv(&g, "e"), &natural).unwrap().degree, GroupElement::Int(-1));
    let eei = gis_mul(&edge(&g, "e"), &edge_inv(&g, "e"));
    assert_eq!(gis_inverse_and_degree(&eei, &natural).unwrap().degree, GroupElement::Int(0));
    assert!(gis_inverse_and_degree(&GisElement::Zero, &natural).is_err());

    for gen in 0..3u64 {
        let z3 = GradeGroup::Cyclic(3);
        let w = WeightMap::constant(&g, z3.clone(), GroupElement::Residue(gen)).unwrap();
        let ee = GisElement::path(g.path_of_ids(&["e", "e"]).unwrap());
        let d = gis_inverse_and_degree(&ee, &GisGrading::Weight(w)).unwrap();
        assert_eq!(d.degree, z3.pow(&GroupElement::Residue(gen), 2));
    }
}

#[test]
fn gradings_are_valid() {
    for g in fixtures() {
        let b = GisBackend::new(g.clone());
        let weights = WeightMap::constant(&g, GradeGroup::Cyclic(3), GroupElement::Residue(1)).unwrap();
        for grading in [GisGrading::Natural, GisGrading::Mod(2), GisGrading::Mod(3), GisGrading::Weight(weights)] {
            let graded = GradedGis::new(b.clone(), grading).unwrap();
            assert!(check_grading(&graded, 3).is_holds(), "{g}");
            for a in graded.enumerate(3).into_iter().skip(1) {
                assert!(graded.degree(&a).is_some());
            }
        }
    }
}

#[test]
fn idempotent_order_examples() {
    let r = idempotent_order_report(&GisBackend::new(loop_graph()), 4);
    assert_eq!(r.maximal, vec!["v"]);
    assert!(!r.minimal_exist);
    assert_eq!(r.per_maximal_submaximal_counts["v"], 1);

    let r = idempotent_order_report(&GisBackend::new(single_edge()), 4);
    assert!(r.minimal_exist);
    assert_eq!(r.maximal, vec!["v", "w"]);

    let r = idempotent_order_report(&GisBackend::new(fork()), 4);
    assert_eq!(r.per_maximal_submaximal_counts["u"], 2);

    // Minimal idempotents exist iff the graph has a sink.
    for g in fixtures() {
        let has_sink = (0..g.vertex_count()).any(|v| g.is_sink(v));
        let r = idempotent_order_report(&GisBackend::new(g.clone()), 4);
        assert_eq!(r.minimal_exist, has_sink, "{g}");
        for name in &r.idempotents {
            assert!(name.contains("^-1") || g.vertex_index(name).is_some(), "{name}");
        }
    }
}

#[test]
fn verdict_examples() {
    let bounds = Bounds::default();
    let loop_v = natural_grading_verdicts(&GisBackend::new(loop_graph()), &[2], bounds).unwrap();
    assert!(loop_v.strong_z.is_fails());
    assert!(loop_v.strong_mod_n[0].1.is_holds());
    assert!(loop_v.locally_strong_z.is_holds());
    assert!(loop_v.saturated_z.is_holds());
    assert!(loop_v.cohn_strong.is_fails());
    assert!(loop_v.consistent(), "{:#?}", loop_v.cross_checks);

    let empty = natural_grading_verdicts(&GisBackend::new(Graph::empty()), &[2], bounds).unwrap();
    assert!(empty.strong_z.is_holds());
    assert!(empty.strong_mod_n[0].1.is_holds());

    let edge_v = natural_grading_verdicts(&GisBackend::new(single_edge()), &[2], bounds).unwrap();
    assert!(edge_v.strong_mod_n[0].1.is_fails());
    assert_eq!(edge_v.strong_mod_n[0].1.witness[0], "v");
    assert!(edge_v.saturated_z.is_holds());
    assert!(edge_v.consistent(), "{:#?}", edge_v.cross_checks);
}

#[test]
fn verdicts_follow_the_structure_of_the_graph() {
    for g in fixtures() {
        let b = GisBackend::new(g.clone());
        let v = natural_grading_verdicts(&b, &[1, 2, 3], Bounds::default()).unwrap();
        let no_sources = (0..g.vertex_count()).all(|u| !g.is_source(u));
        assert!(v.strong_z.is_fails());
        assert_eq!(v.strong_mod_n[0].1.status, grading::Status::Holds);
        for (_, verdict) in &v.strong_mod_n[1..] {
            assert_eq!(verdict.is_holds(), no_sources, "{g}");
        }
        assert!(v.consistent(), "{g}: {:#?}", v.cross_checks.iter().filter(|c| !c.consistent).collect::<Vec<_>>());
    }
    assert!(strong_mod_n_verdict(&GisBackend::new(loop_graph()), 0, Bounds::default()).is_err());
}

#[test]
fn zn_lemma_witnesses_stay_within_bound() {
    for g in [loop_graph(), two_loops(), two_cycle()] {
        let b = GisBackend::new(g.clone());
        for n in [2u64, 3] {
            let graded = GradedGis::new(b.clone(), GisGrading::Mod(n)).unwrap();
            for a in gis_enumerate(&b, 4).into_iter().skip(1) {
                let GisElement::Pair(x, y) = &a else { unreachable!() };
                for shift in 0..n as usize {
                    let z = zn_factorization(&g, x, y, shift).expect("no sources");
                    assert!(z.len() <= y.len() + n as usize);
                    let left = GisElement::pair(x.clone(), z.clone()).unwrap();
                    let right = GisElement::pair(z.clone(), y.clone()).unwrap();
                    assert_eq!(gis_mul(&left, &right), a);
                    assert_eq!(graded.degree(&right), Some(GroupElement::Residue(shift as u64 % n)));
                }
            }
        }
    }
}

/// A graph on `n` vertices `v0, v1, ...` with edges `e0, e1, ...` between the given endpoints.
fn graph_from(n: usize, ends: &[(usize, usize)]) -> Graph {
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<(String, String, String)> = ends
        .iter()
        .enumerate()
        .map(|(k, &(s, r))| (format!("e{k}"), vertices[s % n].clone(), vertices[r % n].clone()))
        .collect();
    let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let es: Vec<(&str, &str, &str)> = edges.iter().map(|(e, s, r)| (e.as_str(), s.as_str(), r.as_str())).collect();
    Graph::from_lists(&vs, &es).unwrap()
}

proptest::proptest! {
    #![proptest_config(proptest::test_runner::Config::with_cases(40))]

    /// Inverse laws and multiplicativity of the natural degree on every
    /// enumerated pair of a random small graph.
    #[test]
    fn inverse_laws_and_natural_degree(n in 1usize..4, ends in proptest::collection::vec((0usize..4, 0usize..4), 0..4)) {
        let b = GisBackend::new(graph_from(n, &ends));
        let graded = GradedGis::natural(b.clone());
        let elems = gis_enumerate(&b, 2);
        for s in &elems {
            let si = b.inverse(s).unwrap();
            proptest::prop_assert_eq!(b.inverse(&si).unwrap(), s.clone());
            proptest::prop_assert_eq!(b.mul(&b.mul(s, &si), s), s.clone());
            for t in &elems {
                let st = b.mul(s, t);
                proptest::prop_assert_eq!(b.inverse(&st).unwrap(), b.mul(&b.inverse(t).unwrap(), &si));
                if st != GisElement::Zero {
                    let want = GradeGroup::Integers.op(&graded.degree(s).unwrap(), &graded.degree(t).unwrap());
                    proptest::prop_assert_eq!(graded.degree(&st), Some(want));
                }
            }
        }
    }
}
