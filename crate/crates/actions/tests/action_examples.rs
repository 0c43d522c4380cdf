// SPDX-License-Identifier: Apache-2.0

use actions::*;
use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::{
    cyclic_with_zero_identity_graded, cyclic_with_zero_trivially_graded, graded_partial_bijections,
    symmetric_inverse_monoid_xy_graded,
};
use grading::{is_strongly_graded, Bounds, FiniteGraded};
use proptest::prelude::*;
use semigroup_core::fixtures::{group_with_zero, symmetric_inverse_monoid};
use semigroup_core::{FiniteSemigroup, PartialBijection};

fn r(k: u64) -> GroupElement {
    GroupElement::Residue(k)
}

fn z2() -> GradeGroup {
    GradeGroup::Cyclic(2)
}

/// Finite graded inverse fixtures.
fn inverse_fixtures() -> Vec<(&'static str, FiniteGraded)> {
    vec![
        ("Z/2 identity", cyclic_with_zero_identity_graded(2)),
        ("Z/3 identity", cyclic_with_zero_identity_graded(3)),
        ("Z/2 trivial", cyclic_with_zero_trivially_graded(2, z2())),
        ("I(x,y)", symmetric_inverse_monoid_xy_graded()),
        ("I^gr 0,1", graded_partial_bijections(&[r(0), r(1)], &z2()).0),
        ("I^gr 0,0,1", graded_partial_bijections(&[r(0), r(0), r(1)], &z2()).0),
    ]
}

#[test]
fn left_regular_and_degenerate_sets_are_valid() {
    let gs = cyclic_with_zero_identity_graded(2);
    let x = left_regular(&gs);
    assert!(sset_validate(&gs.sg, &x.set).is_holds());
    assert!(graded_validate(&gs, &x).is_holds());
    let point = PointedSSet::trivial(gs.sg.order());
    assert!(sset_validate(&gs.sg, &point).is_holds());
}

#[test]
fn broken_associativity_is_reported_with_a_triple() {
    let gs = cyclic_with_zero_identity_graded(2);
    let mut x = left_regular(&gs).set;
    // a·1 = a becomes a·1 = 1: now a(a·1) = a ≠ 1 = (aa)·1.
    x.action[2][1] = 1;
    let v = sset_validate(&gs.sg, &x);
    assert!(v.is_fails());
    assert_eq!(v.witness.len(), 3);
}

#[test]
fn non_unital_set_fails() {
    let sg = semigroup_core::fixtures::null_semigroup(2);
    let n = sg.order();
    let x = PointedSSet::new(vec!["0".into(), "p".into()], 0, vec![vec![0, 0]; n]).unwrap();
    let v = sset_validate(&sg, &x);
    assert!(v.is_fails());
    assert_eq!(v.witness, vec!["p".to_string()]);
}

#[test]
fn shifts_compose() {
    let gs = cyclic_with_zero_identity_graded(3);
    let g = &gs.group;
    let x = left_regular(&gs);
    assert_eq!(graded_shift(&x, g, &g.identity()), x);
    for a in g.enumerate(0) {
        for b in g.enumerate(0) {
            let twice = graded_shift(&graded_shift(&x, g, &a), g, &b);
            assert_eq!(twice, graded_shift(&x, g, &g.op(&a, &b)));
            assert!(graded_validate(&gs, &twice).is_holds());
        }
    }
    let gs2 = cyclic_with_zero_identity_graded(2);
    let x2 = left_regular(&gs2);
    assert_eq!(graded_shift(&graded_shift(&x2, &gs2.group, &r(1)), &gs2.group, &r(1)), x2);
    // x ∈ X(α)_β iff x ∈ X_{βα}: the point `a` (degree 1) sits in X(1)_0.
    let shifted = graded_shift(&x2, &gs2.group, &r(1));
    assert_eq!(shifted.deg(2), Some(&r(0)));
}

/// `S ⊗_S X ≅ SX` for unital `X` over a monoid: compare the union-find
/// classes with the direct action.
#[test]
fn tensor_over_the_whole_monoid_is_the_action() {
    for (_, gs) in inverse_fixtures() {
        let sg = &gs.sg;
        let all: Vec<usize> = (0..sg.order()).collect();
        let right = PointedSSet {
            points: sg.labels().to_vec(),
            zero: sg.zero_index(),
            action: (0..sg.order()).map(|t| (0..sg.order()).map(|p| sg.m(p, t)).collect()).collect(),
        };
        for x in graded_unital_family(&gs, 3).unwrap() {
            let t = tensor(&right, &x.set, &all);
            let values = t.descend(|s, p| x.set.act(s, p)).expect("well defined");
            let mut sorted = values.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), values.len(), "injective");
            assert_eq!(sorted.len(), x.set.len(), "onto SX = X");
            // The induced left action agrees with X.
            let left = PointedSSet {
                action: (0..sg.order()).map(|s| (0..sg.order()).map(|p| sg.m(s, p)).collect()).collect(),
                ..right.clone()
            };
            assert!(tensor_left_action(&t, &left, |a, b| format!("{a}⊗{b}")).is_some());
        }
    }
}

#[test]
fn zero_tensors_form_one_class() {
    let gs = cyclic_with_zero_identity_graded(2);
    let x = left_regular(&gs).set;
    let t = tensor(&x, &x, &[]);
    for p in 0..x.len() {
        assert_eq!(t.class(p, x.zero), t.zero_class);
        assert_eq!(t.class(x.zero, p), t.zero_class);
    }
    // With nothing identified, every pair of nonzero points is its own class.
    assert_eq!(t.len(), 1 + 2 * 2);
}

#[test]
fn mu_is_bijective_on_every_fixture() {
    for (name, gs) in inverse_fixtures() {
        for x in graded_unital_family(&gs, 3).unwrap() {
            let eps = gs.group.identity();
            let mut keep = vec![x.set.zero];
            keep.extend(x.component(&eps));
            let action = (0..gs.sg.order())
                .map(|s| keep.iter().map(|&p| keep.iter().position(|&k| k == x.set.act(s, p)).unwrap_or(0)).collect())
                .collect();
            let y = PointedSSet { points: keep.iter().map(|&p| x.set.points[p].clone()).collect(), zero: 0, action };
            let mu = mu_check(&gs, &y);
            assert!(mu.bijective(), "{name}: {mu:?}");
        }
    }
}

#[test]
fn dade_on_the_identity_graded_group_with_zero() {
    let gs = cyclic_with_zero_identity_graded(2);
    let report = dade_check(&gs, 4).unwrap();
    assert!(report.verdict.is_holds(), "{:?}", report.failures);
    assert!(report.strongly_graded && report.agrees_with_strong && report.lemma_agrees);
    assert_eq!(report.shifts, 2);
    // Unital graded sets are unions of free orbits {x, ax}: {0_X} and one orbit.
    assert_eq!(report.generated, 2);
}

#[test]
fn dade_exhibits_a_non_bijective_nu_when_trivially_graded() {
    let gs = cyclic_with_zero_trivially_graded(2, z2());
    let report = dade_check(&gs, 3).unwrap();
    assert!(report.verdict.is_fails());
    assert!(!report.strongly_graded && report.agrees_with_strong && report.lemma_agrees);
    // S(1) has S(1)_ε = ∅, so ν_{S(1)} misses every nonzero point.
    let shifted = graded_shift(&left_regular(&gs), &gs.group, &r(1));
    let nu = nu_check(&gs, &shifted);
    assert!(!nu.surjective);
}

#[test]
fn dade_agrees_with_strong_grading_on_inverse_fixtures() {
    for (name, gs) in inverse_fixtures() {
        let report = dade_check(&gs, 3).unwrap();
        assert!(report.agrees_with_strong, "{name}");
        assert!(report.lemma_agrees, "{name}");
    }
}

#[test]
fn dade_rejects_non_inverse_input() {
    let sg = semigroup_core::fixtures::left_zero_band(2);
    let gs = FiniteGraded::trivial(sg, z2());
    assert_eq!(dade_check(&gs, 2).unwrap_err(), ActionError::NotInverse);
}

#[test]
fn tensor_product_maps_detect_strong_grading() {
    let strong = cyclic_with_zero_identity_graded(2);
    for a in strong.group.enumerate(0) {
        let m = tensor_product_maps(&strong, &a);
        assert!(m.phi.bijective() && m.psi.bijective(), "{m:?}");
        assert!(m.common_local_units && m.bijective_under_common_units());
    }
    let weak = cyclic_with_zero_trivially_graded(2, z2());
    assert!(tensor_product_maps(&weak, &r(0)).phi_surjective());
    let m = tensor_product_maps(&weak, &r(1));
    assert!(!m.phi_surjective() && !m.psi_surjective());
    for (name, gs) in inverse_fixtures() {
        let all_surjective = gs.group.enumerate(0).iter().all(|a| {
            let m = tensor_product_maps(&gs, a);
            m.phi_surjective() && m.psi_surjective()
        });
        assert_eq!(all_surjective, is_strongly_graded(&gs, Bounds::default()).is_holds(), "{name}");
    }
}

#[test]
fn partial_symmetries_follow_component_sizes() {
    let g = z2();
    let even = partial_symmetry_build(&[r(0), r(0), r(1), r(1)], &g).unwrap();
    assert!(even.strong.is_holds() && even.locally_strong.is_holds() && even.agrees());
    let uneven = partial_symmetry_build(&[r(0), r(1), r(1)], &g).unwrap();
    assert!(uneven.strong.is_fails() && uneven.locally_strong.is_holds() && uneven.agrees());
    let lopsided = partial_symmetry_build(&[r(0), r(0)], &g).unwrap();
    assert!(lopsided.strong.is_fails() && lopsided.locally_strong.is_fails() && lopsided.agrees());
    assert_eq!(even.i_x.order(), 209);
    // T^gr(X) is a graded semigroup.
    assert!(grading::check_grading(&uneven.t_gr, 0).is_holds());
}

fn degrees_of(gs: &FiniteGraded) -> Vec<Option<GroupElement>> {
    gs.degrees().to_vec()
}

#[test]
fn gradings_of_i3_are_trivial() {
    let (sg, _) = symmetric_inverse_monoid(3, &["x", "y", "z"]);
    for g in [GradeGroup::Cyclic(2), GradeGroup::Cyclic(3)] {
        let found = grading_search(&sg, &g).unwrap();
        assert_eq!(found.len(), 1, "{g}");
        assert_eq!(found[0], FiniteGraded::trivial(sg.clone(), g));
    }
}

#[test]
fn gradings_of_i2_are_trivial_plus_the_swap_grading() {
    let nontrivial = symmetric_inverse_monoid_xy_graded();
    let found = grading_search(&nontrivial.sg, &z2()).unwrap();
    let found: Vec<_> = found.iter().map(degrees_of).collect();
    assert_eq!(found.len(), 2);
    assert!(found.contains(&degrees_of(&FiniteGraded::trivial(nontrivial.sg.clone(), z2()))));
    assert!(found.contains(&degrees_of(&nontrivial)));
}

#[test]
fn gradings_of_the_group_with_zero_are_the_homomorphisms() {
    let sg = group_with_zero(2);
    let found: Vec<_> = grading_search(&sg, &z2()).unwrap().iter().map(degrees_of).collect();
    assert_eq!(found.len(), 2);
    assert!(found.contains(&vec![None, Some(r(0)), Some(r(0))]));
    assert!(found.contains(&vec![None, Some(r(0)), Some(r(1))]));
    // ℤ/4 ∪ {0} into ℤ/4: four homomorphisms, closed under automorphisms.
    let g4 = GradeGroup::Cyclic(4);
    let found: Vec<_> = grading_search(&group_with_zero(4), &g4).unwrap().iter().map(degrees_of).collect();
    assert_eq!(found.len(), 4);
    for aut in g4.automorphisms().unwrap() {
        for d in &found {
            let image: Vec<_> = d
                .iter()
                .map(|x| x.as_ref().map(|x| aut[g4.enumerate(0).iter().position(|y| y == x).unwrap()].clone()))
                .collect();
            assert!(found.contains(&image));
        }
    }
}

#[test]
fn vagner_preston_translations() {
    let gs = cyclic_with_zero_identity_graded(2);
    let theta = vagner_preston_maps(&gs.sg).unwrap();
    // Points are 1 (index 0) and a (index 1); θ_a swaps them, θ_0 is empty.
    assert_eq!(theta[2], PartialBijection::new(vec![Some(1), Some(0)]));
    assert!(theta[0].is_empty());
    let report = vagner_preston_graded(&symmetric_inverse_monoid_xy_graded()).unwrap();
    assert!(report.verdict.is_holds() && report.homomorphism);
    assert_eq!(report.points, 6);
}

#[test]
fn graded_embeddings_on_every_inverse_fixture() {
    for (name, gs) in inverse_fixtures() {
        assert!(vagner_preston_graded(&gs).unwrap().verdict.is_holds(), "{name}");
        assert!(cayley_graded_embedding(&gs).verdict.is_holds(), "{name}");
    }
    let interval = grading::fixtures::interval_graded(0, 2);
    assert!(cayley_graded_embedding(&interval).verdict.is_holds());
    let band = FiniteGraded::trivial(semigroup_core::fixtures::left_zero_band(2), z2());
    assert_eq!(vagner_preston_graded(&band).unwrap_err(), ActionError::NotInverse);
}

#[test]
fn cayley_separates_by_the_adjoined_identity() {
    let gs = cyclic_with_zero_trivially_graded(3, z2());
    let report = cayley_graded_embedding(&gs);
    assert!(report.injective && report.graded);
    assert_eq!(report.maps["a"], "[0,a,a2,1,a]");
}

#[test]
fn germ_groupoid_of_the_strongly_graded_group_with_zero() {
    let gs = cyclic_with_zero_identity_graded(2);
    let theta = vagner_preston_maps(&gs.sg).unwrap();
    let g = germ_groupoid(&gs, &theta).unwrap();
    assert!(g.equivalence && g.grading_well_defined && g.groupoid_axioms);
    assert!(g.strong.is_holds() && g.transfer_holds());
    assert_eq!(g.germs.len(), 4);
    // Identity germs are [1, x].
    for (x, &u) in g.units.iter().enumerate() {
        assert_eq!(g.germs[u].rep, (1, x));
    }
}

#[test]
fn germ_groupoid_of_a_trivially_graded_semigroup() {
    let gs = cyclic_with_zero_trivially_graded(2, z2());
    let g = germ_groupoid(&gs, &vagner_preston_maps(&gs.sg).unwrap()).unwrap();
    assert!(g.germs.iter().all(|x| x.degree == r(0)));
    assert!(g.strong.is_fails());
    let trivial = cyclic_with_zero_trivially_graded(2, GradeGroup::trivial());
    let g = germ_groupoid(&trivial, &vagner_preston_maps(&trivial.sg).unwrap()).unwrap();
    assert!(g.strong.is_holds());
}

#[test]
fn germ_groupoids_of_strongly_graded_fixtures_are_strongly_graded() {
    for (name, gs) in inverse_fixtures() {
        let g = germ_groupoid(&gs, &vagner_preston_maps(&gs.sg).unwrap()).unwrap();
        assert!(g.equivalence && g.grading_well_defined && g.groupoid_axioms, "{name}");
        assert!(g.transfer_holds(), "{name}");
    }
}

#[test]
fn degenerate_actions_are_rejected() {
    let gs = cyclic_with_zero_identity_graded(2);
    // A third point outside every domain.
    let theta: Vec<PartialBijection> = vagner_preston_maps(&gs.sg)
        .unwrap()
        .iter()
        .map(|t| PartialBijection::new(t.as_slice().iter().copied().chain([None]).collect()))
        .collect();
    assert!(matches!(germ_groupoid(&gs, &theta), Err(ActionError::DegenerateAction(_))));
}

#[test]
fn cauchy_completion_of_i2() {
    let gs = symmetric_inverse_monoid_xy_graded();
    let c = cauchy_completion(&gs.sg);
    assert_eq!(c.objects.len(), 4);
    assert!(c.closed && c.hom_counts_match);
    let one = gs.sg.index_of("1").unwrap();
    assert_eq!(c.hom(one, one).len(), gs.sg.order());
    let p = projective_indecomposables(&gs, 0);
    assert!(p.distinct_for_distinct_alpha);
    assert!(p.entries.iter().all(|e| e.valid));
    assert_eq!(p.entries.len(), 3 * 2);
}

fn roundtrip_fixtures() -> Vec<FiniteGraded> {
    vec![
        cyclic_with_zero_identity_graded(2),
        cyclic_with_zero_trivially_graded(2, z2()),
        symmetric_inverse_monoid_xy_graded(),
    ]
}

#[test]
fn smash_functors_roundtrip_on_generated_sets() {
    let mut pairs = 0;
    for gs in roundtrip_fixtures() {
        let mut family = graded_unital_family(&gs, 5).unwrap();
        family.extend(gs.group.enumerate(0).iter().map(|a| graded_shift(&left_regular(&gs), &gs.group, a)));
        for x in family {
            let rt = smash_functor_roundtrip(&gs, &x).unwrap();
            assert!(rt.ok(), "{}", x.to_json());
            pairs += 1;
        }
    }
    assert!(pairs >= 50, "{pairs}");
}

#[test]
fn smash_functor_on_the_point_and_errors() {
    let gs = cyclic_with_zero_identity_graded(2);
    let point = GradedSSet { set: PointedSSet::trivial(gs.sg.order()), degrees: vec![None] };
    assert!(smash_functor_roundtrip(&gs, &point).unwrap().equal);
    let null = FiniteGraded::trivial(semigroup_core::fixtures::null_semigroup(2), z2());
    let x = left_regular(&null);
    assert_eq!(smash_functor_roundtrip(&null, &x).unwrap_err(), ActionError::NoLocalUnits);
    let z = FiniteGraded::trivial(group_with_zero(2), GradeGroup::Integers);
    assert_eq!(smash_functor_roundtrip(&z, &left_regular(&z)).unwrap_err(), ActionError::InfiniteGroup);
}

fn random_action(sg: &FiniteSemigroup, n: usize, cells: &[usize]) -> PointedSSet {
    let action = (0..sg.order())
        .map(|s| {
            (0..n)
                .map(|p| if s == sg.zero_index() || p == 0 { 0 } else { cells[(s * n + p) % cells.len()] % n })
                .collect()
        })
        .collect();
    PointedSSet { points: (0..n).map(|i| i.to_string()).collect(), zero: 0, action }
}

proptest! {
    /// Every valid random action on few points appears, up to isomorphism,
    /// as a validated set; invalid ones are rejected by the validator.
    #[test]
    fn validator_matches_the_axioms(cells in proptest::collection::vec(0usize..3, 9)) {
        let sg = group_with_zero(2);
        let x = random_action(&sg, 3, &cells);
        let associative = (0..3).all(|a| (0..3).all(|b| (0..3).all(|p| x.act(a, x.act(b, p)) == x.act(sg.m(a, b), p))));
        let unital = x.non_unital_point().is_none();
        prop_assert_eq!(sset_validate(&sg, &x).is_holds(), associative && unital);
    }

    #[test]
    fn family_members_roundtrip_and_have_bijective_nu(k in 0usize..3, pick in 0usize..64) {
        let gs = roundtrip_fixtures().swap_remove(k);
        let family = graded_unital_family(&gs, 3).unwrap();
        let x = &family[pick % family.len()];
        prop_assert!(graded_validate(&gs, x).is_holds());
        prop_assert!(smash_functor_roundtrip(&gs, x).unwrap().ok());
        if is_strongly_graded(&gs, Bounds::default()).is_holds() {
            prop_assert!(nu_check(&gs, x).bijective());
        }
    }
}
