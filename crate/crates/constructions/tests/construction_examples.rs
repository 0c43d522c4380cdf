// SPDX-License-Identifier: Apache-2.0

use constructions::fixtures::{diagonal_rees, diagonal_rees_data};
use constructions::*;
use gis::GisElement;
use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::{
    cyclic_with_zero_identity_graded, cyclic_with_zero_trivially_graded, graded_partial_bijections, interval_graded,
    symmetric_inverse_monoid_xy_graded,
};
use grading::{check_grading, epsilon_transfer_report, is_strongly_graded, Bounds, FiniteGraded, GradedSemigroup};
use graphs::fixtures::{loop_graph, random_graph, single_edge, two_cycle, two_cycle_with_tail};
use graphs::{Graph, WeightMap};
use proptest::prelude::*;
use semigroup_core::fixtures::{left_zero_band, null_semigroup};
use semigroup_core::{ideals, FiniteSemigroup, IdealKind, Semigroup};

fn r(k: u64) -> GroupElement {
    GroupElement::Residue(k)
}

fn z2() -> FiniteGraded {
    cyclic_with_zero_identity_graded(2)
}

fn idx(s: &FiniteGraded, label: &str) -> usize {
    s.sg.index_of(label).unwrap()
}

fn graded_fixtures() -> Vec<(&'static str, FiniteGraded)> {
    vec![
        ("Z/2 identity", cyclic_with_zero_identity_graded(2)),
        ("Z/3 identity", cyclic_with_zero_identity_graded(3)),
        ("Z/2 trivial over Z/2", cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2))),
        ("I({x,y})", symmetric_inverse_monoid_xy_graded()),
        ("interval", interval_graded(0, 2)),
        ("null", FiniteGraded::trivial(null_semigroup(2), GradeGroup::Cyclic(2))),
        ("left zero band", FiniteGraded::trivial(left_zero_band(2), GradeGroup::Cyclic(3))),
    ]
}

fn assert_associative<S: Semigroup>(s: &S, bound: usize) {
    let els = s.enumerate(bound);
    for a in &els {
        for b in &els {
            let ab = s.mul(a, b);
            for c in &els {
                assert_eq!(s.mul(&ab, c), s.mul(a, &s.mul(b, c)), "{} {} {}", s.render(a), s.render(b), s.render(c));
            }
        }
    }
}

#[test]
fn smash_multiplication_examples() {
    let s = z2();
    let (one, a) = (idx(&s, "1"), idx(&s, "a"));
    let sm = smash_build(&s, 0, 0).unwrap();
    let ap0 = sm.elem(a, r(0));
    let ap1 = sm.elem(a, r(1));
    assert_eq!(sm.mul(&ap0, &ap1), sm.elem(one, r(1)));
    assert_eq!(sm.mul(&ap0, &ap0), SmashElement::Zero);
    assert_eq!(sm.render(&ap1), "aP_1");

    let report = smash_report(&sm, 0);
    let idem: Vec<_> = report.idempotents.clone();
    assert_eq!(idem, vec!["0", "1P_0", "1P_1"]);
    assert!(report.idempotents_match && report.transfers());
}

#[test]
fn smash_is_a_graded_semigroup_and_transfers_structure() {
    for (name, s) in graded_fixtures() {
        let sm = smash_build(&s, 2, 0).unwrap();
        assert_associative(&sm, 0);
        assert!(check_grading(&sm, 0).is_holds(), "{name}");
        let rep = smash_report(&sm, 0);
        assert!(rep.transfers(), "{name}: {rep:?}");
        assert_eq!(rep.fragment, name == "interval", "{name}");
    }
    // The null semigroup has no local units and neither does its smash product.
    let null = FiniteGraded::trivial(null_semigroup(2), GradeGroup::Cyclic(2));
    let rep = smash_report(&smash_build(&null, 0, 0).unwrap(), 0);
    assert!(!rep.base_local_units && !rep.smash_local_units);
}

#[test]
fn smash_rejects_invalid_grading() {
    let sg = semigroup_core::fixtures::group_with_zero(2);
    let bad = FiniteGraded::new(sg.clone(), GradeGroup::Cyclic(2), vec![None, Some(r(1)), Some(r(1))]);
    if let Ok(bad) = bad {
        assert!(matches!(smash_build(&bad, 0, 0), Err(ConstructionError::InvalidGrading(_))));
    }
}

#[test]
fn smash_shift_examples() {
    let s = z2();
    let a = idx(&s, "a");
    let sm = Smash::new(&s, 0);
    let ap0 = sm.elem(a, r(0));
    for x in sm.enumerate(0) {
        assert_eq!(smash_shift(&sm, &x, &r(0)), x);
        assert_eq!(smash_shift(&sm, &smash_shift(&sm, &x, &r(1)), &r(1)), x);
    }
    assert_eq!(smash_shift(&sm, &ap0, &r(1)), sm.elem(a, r(1)));
    for alpha in [r(0), r(1)] {
        assert!(verify_shift(&sm, &alpha, 0).is_holds());
    }
}

#[test]
fn smash_shift_composition_over_a_nonabelian_group() {
    // S3 as a table group; degrees of I^gr(X) with points in degrees e, (12), (123).
    let s3 = grade_group::GradeGroup::table(s3_table()).unwrap();
    let pts = [GroupElement::Index(0), GroupElement::Index(1), GroupElement::Index(3)];
    let (s, _) = graded_partial_bijections(&pts, &s3);
    let sm = Smash::new(&s, 0);
    let els = sm.enumerate(0);
    let group = s.group();
    for a in group.enumerate(0) {
        assert!(verify_shift(&sm, &a, 0).is_holds());
        for b in group.enumerate(0) {
            let ba = group.op(&b, &a);
            for x in &els {
                assert_eq!(smash_shift(&sm, &smash_shift(&sm, x, &b), &a), smash_shift(&sm, x, &ba));
            }
        }
    }
    assert_associative(&sm, 0);
    assert!(check_grading(&sm, 0).is_holds());
}

/// Composition table of S3 on {0,1,2}: permutations in a fixed order, `a·b = a∘b`.
fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pos = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms.iter().map(|a| perms.iter().map(|b| pos([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect()
}

#[test]
fn stable_rees_examples() {
    let s = z2();
    let (one, a) = (idx(&s, "1"), idx(&s, "a"));
    let sr = stable_rees_build(&s, 0, 0).unwrap();
    let e01a = sr.elem(r(0), r(1), a);
    let e10a = sr.elem(r(1), r(0), a);
    assert_eq!(sr.mul(&e01a, &e10a), sr.elem(r(0), r(0), one));
    assert_eq!(sr.mul(&e01a, &e01a), StableReesElement::Zero);
    assert_eq!(sr.degree(&e01a), Some(r(0)));
    assert_eq!(sr.render(&e01a), "e_{0,1}(a)");
}

#[test]
fn stable_rees_is_strongly_graded_with_local_units() {
    let bounds = Bounds { element_bound: 0, witness_bound: 0, group_bound: 1, chain_bound: 3 };
    for (name, s) in graded_fixtures() {
        let sr = stable_rees_build(&s, 1, 0).unwrap();
        assert_associative(&sr, 0);
        assert!(check_grading(&sr, 0).is_holds(), "{name}");
        let rep = stable_rees_report(&sr, bounds);
        assert!(rep.idempotents_match, "{name}");
        assert_eq!(rep.base_local_units, rep.local_units, "{name}");
        assert_eq!(rep.base_inverse, rep.inverse, "{name}");
        if rep.base_local_units {
            assert!(!rep.strongly_graded.is_fails(), "{name}: {:?}", rep.strongly_graded);
            if sr.is_finite() {
                assert!(rep.strongly_graded.is_holds() && rep.strongly_graded.exact, "{name}");
            }
        }
    }
    // S itself is not strongly graded (nothing in degree 1), yet S_Γ is.
    let s = cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2));
    assert!(is_strongly_graded(&s, bounds).is_fails());
    assert!(is_strongly_graded(&StableRees::new(&s, 0), bounds).is_holds());
}

#[test]
fn smash_embeds_in_identity_component_of_stable_rees() {
    let s = z2();
    let a = idx(&s, "a");
    let sm = Smash::new(&s, 0);
    let sr = StableRees::new(&s, 0);
    assert_eq!(smash_to_stable(&s, &sm.elem(a, r(1))), sr.elem(r(0), r(1), a));
    let ap0 = sm.elem(a, r(0));
    let ap1 = sm.elem(a, r(1));
    assert_eq!(
        smash_to_stable(&s, &sm.mul(&ap0, &ap1)),
        sr.mul(&smash_to_stable(&s, &ap0), &smash_to_stable(&s, &ap1))
    );

    for (name, s) in graded_fixtures() {
        match iso_smash_stable_eps(&s, 2, 0) {
            Ok(rep) => {
                assert!(rep.verdict.is_holds(), "{name}: {:?}", rep.verdict);
                assert!(rep.injective && rep.homomorphism && rep.onto_identity_component);
            }
            Err(ConstructionError::NoLocalUnits(_)) => assert_eq!(name, "null"),
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

/// `e_ij(a)` as a `|I| × |J|` matrix over S with one nonzero entry, multiplied
/// as `A·P·B` directly.
fn matrix_product(
    s: &FiniteSemigroup,
    p: &[Vec<Option<usize>>],
    x: (usize, usize, usize),
    y: (usize, usize, usize),
    n: usize,
) -> Vec<Vec<usize>> {
    let zero = s.zero_index();
    let mat = |(i, a, j): (usize, usize, usize)| {
        let mut m = vec![vec![zero; n]; n];
        m[i][j] = a;
        m
    };
    let (a, b) = (mat(x), mat(y));
    // Sandwich entries: None is the adjoined identity.
    let times = |u: usize, q: Option<usize>| q.map_or(u, |q| s.m(u, q));
    let mut out = vec![vec![zero; n]; n];
    for i in 0..n {
        for l in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = s.m(times(a[i][j], p[j][k]), b[k][l]);
                    if t != zero {
                        assert_eq!(out[i][l], zero, "at most one nonzero term");
                        out[i][l] = t;
                    }
                }
            }
        }
    }
    out
}

#[test]
fn rees_matrix_matches_matrix_multiplication() {
    let s = cyclic_with_zero_trivially_graded(3, GradeGroup::Cyclic(2));
    let t = diagonal_rees(3);
    let one = s.sg.index_of("1").unwrap();
    let zero = s.sg.zero_index();
    let p = vec![vec![Some(one), Some(zero)], vec![Some(zero), Some(one)]];
    for x in 1..t.sg().order() {
        for y in 1..t.sg().order() {
            let prod = t.sg().m(x, y);
            let expected = matrix_product(&s.sg, &p, t.entries[x].unwrap(), t.entries[y].unwrap(), 2);
            let got = match t.entries[prod] {
                None => vec![vec![zero; 2]; 2],
                Some((i, a, j)) => {
                    let mut m = vec![vec![zero; 2]; 2];
                    m[i][j] = a;
                    m
                }
            };
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn diagonal_rees_components_and_ideals() {
    let t = diagonal_rees(2);
    let s = cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2));
    let (g, h) = (idx(&s, "1"), idx(&s, "a"));
    for x in 1..t.sg().order() {
        let (i, _, j) = t.entries[x].unwrap();
        let expected = if i == j { r(0) } else { r(1) };
        assert_eq!(t.graded.deg(x), Some(&expected));
    }
    let e = |i, a, j| t.index_of(i, a, j).unwrap();
    assert_eq!(t.sg().m(e(0, h, 0), e(0, h, 1)), e(0, g, 1));
    assert_eq!(t.sg().m(e(0, g, 1), e(0, h, 1)), 0);

    // T is 0-simple; T_0 (two copies of S on the diagonal) is not.
    let nontrivial = |sg: &FiniteSemigroup| {
        ideals(sg, IdealKind::TwoSided).into_iter().filter(|i| i.len() > 1 && i.len() < sg.order()).count()
    };
    assert_eq!(nontrivial(t.sg()), 0);
    let diag: Vec<usize> = (0..t.sg().order()).filter(|&x| t.entries[x].is_none_or(|(i, _, j)| i == j)).collect();
    let (t0, _) = t.sg().restrict(&diag).unwrap();
    assert_eq!(nontrivial(&t0), 2);
    let rep = epsilon_transfer_report(&t.graded).unwrap();
    assert_eq!(rep.nontrivial_two_sided, (0, 2));
}

#[test]
fn rees_sandwich_degree_condition() {
    let s = cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2));
    let mut data = diagonal_rees_data();
    data.sandwich[1][0] = SandwichEntry::One;
    let err = rees_matrix_build(&s, &data).unwrap_err();
    assert!(matches!(err, ConstructionError::SandwichDegreeViolation { ref j, ref i, .. } if j == "2" && i == "1"));

    // A degree-0 element where degree 1 is required.
    let mut data = diagonal_rees_data();
    data.sandwich[0][1] = SandwichEntry::Elem("a".into());
    assert!(matches!(rees_matrix_build(&s, &data), Err(ConstructionError::SandwichDegreeViolation { .. })));

    // The adjoined identity is fine on the diagonal.
    let mut data = diagonal_rees_data();
    data.sandwich[0][0] = SandwichEntry::One;
    assert!(rees_matrix_build(&s, &data).is_ok());
}

#[test]
fn rees_data_from_json() {
    let v = serde_json::json!({
        "I": 2, "J": ["x", "y"], "alpha": [0, 1], "beta": [0, 1],
        "sandwich": [["1", 0], [null, 1]]
    });
    let data = ReesMatrixData::from_json(&v, &GradeGroup::Cyclic(2)).unwrap();
    assert_eq!(data.rows, vec!["1", "2"]);
    assert_eq!(data.cols, vec!["x", "y"]);
    assert_eq!(data.sandwich[0], vec![SandwichEntry::Elem("1".into()), SandwichEntry::Zero]);
    assert_eq!(data.sandwich[1], vec![SandwichEntry::Zero, SandwichEntry::One]);
    let s = cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2));
    let t = rees_matrix_build(&s, &data).unwrap();
    assert_eq!(t.sg().order(), 1 + 4 * 2);
    assert!(ReesMatrixData::from_json(&serde_json::json!({"I": 1}), &GradeGroup::Cyclic(2)).is_err());
}

fn int_window(k: i64) -> Vec<GroupElement> {
    (-k..=k).map(GroupElement::Int).collect()
}

#[test]
fn covering_iso_generator_examples() {
    let g = loop_graph();
    let iso = CoveringIso::new(&g, &WeightMap::unit(&g), &int_window(2)).unwrap();
    let cov = &iso.covering;
    let e1 = cov.edge_at(g.edge_index("e").unwrap(), &GroupElement::Int(1)).unwrap();
    let v0 = cov.vertex_at(0, &GroupElement::Int(0)).unwrap();
    let path_e1 = cov.graph.path(cov.graph.edge(e1).src, vec![e1]).unwrap();
    let img = iso.image(&GisElement::path(path_e1));
    assert_eq!(iso.target.render(&img), "eP_0");
    let img_v0 = iso.image(&GisElement::vertex(v0));
    assert_eq!(iso.target.render(&img_v0), "vP_0");
    assert!(iso.target.is_idempotent(&img_v0));
}

/// `φ(xy⁻¹) = x̄ȳ⁻¹P_β` with `β` the level of the source of `y`.
#[test]
fn covering_image_matches_closed_form() {
    let g = two_cycle_with_tail();
    let w = WeightMap::unit(&g);
    let iso = CoveringIso::new(&g, &w, &int_window(3)).unwrap();
    let cov = &iso.covering;
    for x in gis::gis_enumerate(&iso.domain.backend, 4) {
        let GisElement::Pair(p, q) = &x else { continue };
        let project = |path: &graphs::Path| {
            let edges = path.edges().iter().map(|&e| cov.edge_origin[e].0).collect();
            g.path(cov.vertex_origin[path.source()].0, edges).unwrap()
        };
        let beta = cov.vertex_origin[q.source()].1.clone();
        let expected = SmashElement::Elem(GisElement::Pair(project(p), project(q)), beta);
        assert_eq!(iso.image(&x), expected);
        assert_eq!(iso.lift(&expected), Some(x.clone()));
    }
}

#[test]
fn covering_iso_verified_on_windows() {
    let cases: Vec<(Graph, GradeGroup, Vec<GroupElement>, usize)> = vec![
        (loop_graph(), GradeGroup::Cyclic(3), GradeGroup::Cyclic(3).enumerate(0), 4),
        (loop_graph(), GradeGroup::Integers, int_window(5), 6),
        (two_cycle(), GradeGroup::Cyclic(2), GradeGroup::Cyclic(2).enumerate(0), 6),
        (two_cycle(), GradeGroup::Integers, int_window(5), 5),
        (single_edge(), GradeGroup::Integers, int_window(1), 4),
    ];
    for (g, group, window, bound) in cases {
        let w = WeightMap::constant(&g, group.clone(), group.from_int(1).unwrap()).unwrap();
        let rep = covering_iso(&g, &w, &window, bound).unwrap();
        assert!(rep.verdict.is_holds(), "{group:?}: {:?}", rep.verdict);
        assert_eq!(rep.lifted + 1, rep.domain_size);
        if group.is_finite() {
            assert_eq!(rep.outside_window, 0, "the whole group is the window");
        }
    }
    let g = single_edge();
    let rep = covering_iso(&g, &WeightMap::unit(&g), &int_window(1), 4).unwrap();
    assert!(rep.verdict.exact || rep.verdict.is_holds());
}

#[test]
fn covering_iso_rejects_empty_window() {
    let g = loop_graph();
    assert!(matches!(covering_iso(&g, &WeightMap::unit(&g), &[], 2), Err(ConstructionError::WindowTooSmall(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn covering_iso_holds_on_random_graphs(seed in any::<u64>(), n in 2u64..4) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 3, 4);
        let group = GradeGroup::Cyclic(n);
        let w = WeightMap::constant(&g, group.clone(), r(1)).unwrap();
        let rep = covering_iso(&g, &w, &group.enumerate(0), 3).unwrap();
        prop_assert!(rep.verdict.is_holds(), "{:?}", rep.verdict);
        prop_assert_eq!(rep.outside_window, 0);
    }

    #[test]
    fn smash_products_associate_on_random_triples(a in 0usize..4, b in 0usize..4, c in 0usize..4, x in 0u64..4, y in 0u64..4, z in 0u64..4) {
        let s = cyclic_with_zero_identity_graded(4);
        let sm = Smash::new(&s, 0);
        let (p, q, t) = (sm.elem(a, r(x)), sm.elem(b, r(y)), sm.elem(c, r(z)));
        prop_assert_eq!(sm.mul(&sm.mul(&p, &q), &t), sm.mul(&p, &sm.mul(&q, &t)));
    }
}
