// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::{
    cyclic_with_zero_identity_graded, cyclic_with_zero_trivially_graded, graded_partial_bijections, interval_graded,
    symmetric_inverse_monoid_xy_graded,
};
use grading::{
    check_graded_hom, check_grading, components_and_support, epsilon_transfer_report, graded_green,
    is_locally_strongly_graded, is_saturated_strongly_graded, is_strongly_graded, strong_equivalents, veronese, Bounds,
    FiniteGraded, GradedSemigroup, GradingError, Status,
};
use proptest::prelude::*;
use semigroup_core::fixtures::{group_with_zero, symmetric_inverse_monoid};
use semigroup_core::{green_classes, Semigroup};

fn res(k: u64) -> GroupElement {
    GroupElement::Residue(k)
}

#[test]
fn trivial_gradings_are_valid() {
    for sg in [group_with_zero(3), symmetric_inverse_monoid(3, &["a", "b", "c"]).0] {
        let gs = FiniteGraded::trivial(sg, GradeGroup::Cyclic(2));
        assert!(check_grading(&gs, 0).is_holds());
        let comps = components_and_support(&gs, 0);
        assert_eq!(comps.support, BTreeSet::from([res(0)]));
    }
}

#[test]
fn nontrivial_grading_of_two_point_monoid() {
    let gs = symmetric_inverse_monoid_xy_graded();
    assert!(check_grading(&gs, 0).is_holds());

    // Same map with τ moved to degree 0.
    let tau = gs.sg.index_of("τ").unwrap();
    let mut degrees = gs.degrees().to_vec();
    degrees[tau] = Some(res(0));
    let broken = FiniteGraded::new(gs.sg.clone(), GradeGroup::Cyclic(2), degrees).unwrap();
    let v = check_grading(&broken, 0);
    assert_eq!(v.status, Status::Fails);
    // The witness must be a genuine violation.
    let a = broken.sg.index_of(&v.witness[0]).unwrap();
    let b = broken.sg.index_of(&v.witness[1]).unwrap();
    let ab = broken.sg.m(a, b);
    assert_ne!(ab, 0);
    assert_ne!(broken.deg(ab).cloned(), Some(GradeGroup::Cyclic(2).op(broken.deg(a).unwrap(), broken.deg(b).unwrap())));
    // In particular τ·θxy = θyy is one such violation.
    let txy = broken.sg.index_of("θxy").unwrap();
    assert_eq!(broken.sg.label(broken.sg.m(tau, txy)), "θyy");
}

#[test]
fn zero_semigroup_is_vacuous() {
    let sg = semigroup_core::FiniteSemigroup::new(vec![vec![0]], 0, None).unwrap();
    let gs = FiniteGraded::trivial(sg, GradeGroup::Cyclic(2));
    assert!(components_and_support(&gs, 0).support.is_empty());
    assert!(is_strongly_graded(&gs, Bounds::default()).is_holds());
    assert!(is_locally_strongly_graded(&gs, Bounds::default()).unwrap().is_holds());
}

#[test]
fn strong_grading_examples() {
    // Oracle for the group with zero: brute force over all component pairs.
    let gs = cyclic_with_zero_identity_graded(2);
    let mut oracle = true;
    for alpha in 0..2u64 {
        for beta in 0..2u64 {
            let comp = |d: u64| -> Vec<usize> { (0..3).filter(|&x| x == 0 || gs.deg(x) == Some(&res(d))).collect() };
            let mut prods = BTreeSet::new();
            for a in comp(alpha) {
                for b in comp(beta) {
                    prods.insert(gs.sg.m(a, b));
                }
            }
            oracle &= prods == comp((alpha + beta) % 2).into_iter().collect();
        }
    }
    assert!(oracle);
    assert!(is_strongly_graded(&gs, Bounds::default()).is_holds());

    let interval = interval_graded(0, 1);
    assert!(check_grading(&interval, 0).is_holds());
    let v = is_strongly_graded(&interval, Bounds::default());
    assert_eq!(v.status, Status::Fails);
    assert!(v.exact);

    let trivial = cyclic_with_zero_trivially_graded(2, GradeGroup::Cyclic(2));
    let v = is_strongly_graded(&trivial, Bounds::default());
    assert_eq!(v.status, Status::Fails);
}

#[test]
fn two_point_monoid_nontrivial_grading_is_strong() {
    let gs = symmetric_inverse_monoid_xy_graded();
    assert!(is_strongly_graded(&gs, Bounds::default()).is_holds());
    assert!(is_locally_strongly_graded(&gs, Bounds::default()).unwrap().is_holds());
    assert!(is_saturated_strongly_graded(&gs, Bounds::default()).unwrap().is_holds());
    assert!(strong_equivalents(&gs).unwrap().values().all(|&b| b));
}

#[test]
fn graded_partial_bijection_examples() {
    let z2 = GradeGroup::Cyclic(2);
    let (balanced, _) = graded_partial_bijections(&[res(0), res(0), res(1), res(1)], &z2);
    assert!(is_strongly_graded(&balanced, Bounds::default()).is_holds());

    let (uneven, _) = graded_partial_bijections(&[res(0), res(1), res(1)], &z2);
    assert_eq!(is_strongly_graded(&uneven, Bounds::default()).status, Status::Fails);
    assert!(is_locally_strongly_graded(&uneven, Bounds::default()).unwrap().is_holds());

    let (empty_odd, _) = graded_partial_bijections(&[res(0), res(0)], &z2);
    assert_eq!(is_locally_strongly_graded(&empty_odd, Bounds::default()).unwrap().status, Status::Fails);
}

#[test]
fn locally_strong_needs_inverse() {
    let band = FiniteGraded::trivial(semigroup_core::fixtures::left_zero_band(2), GradeGroup::Cyclic(2));
    assert_eq!(is_locally_strongly_graded(&band, Bounds::default()), Err(GradingError::NotInverse));
}

#[test]
fn veronese_examples() {
    let gs = interval_graded(0, 3);
    let v1 = veronese(&gs, 1).unwrap();
    assert_eq!(v1.enumerate(0), gs.enumerate(0));
    for a in gs.enumerate(0) {
        assert_eq!(v1.degree(&a), gs.degree(&a));
    }
    let flipped = veronese(&gs, -1).unwrap();
    for a in gs.enumerate(0).into_iter().filter(|&a| a != 0) {
        let GroupElement::Int(d) = gs.degree(&a).unwrap() else { panic!() };
        assert_eq!(flipped.degree(&a), Some(GroupElement::Int(-d)));
    }
    let even = veronese(&gs, 2).unwrap();
    assert!(check_grading(&even, 0).is_holds());
    for a in even.enumerate(0).into_iter().filter(|&a| a != 0) {
        let GroupElement::Int(d) = gs.degree(&a).unwrap() else { panic!() };
        assert_eq!(d % 2, 0);
    }
    assert!(matches!(veronese(symmetric_inverse_monoid_xy_graded(), 2), Err(GradingError::GroupNotTorsionFreeAbelian)));
}

#[test]
fn epsilon_transfer_for_group_with_zero() {
    let rep = epsilon_transfer_report(&cyclic_with_zero_identity_graded(2)).unwrap();
    assert_eq!(rep.s_eps.order(), 2);
    let (s, e) = rep.zero_e_unitary.unwrap();
    assert_eq!(s, e);
    let transfer = rep.regularity_transfer.unwrap();
    assert!(transfer.agrees() && transfer.s_inverse);
    assert!(rep.ideal_correspondence.iter().all(|c| c.bijective && c.inverse_map_ok));
}

#[test]
fn zero_e_unitary_agreement_on_graded_partial_bijections() {
    let z2 = GradeGroup::Cyclic(2);
    for pts in [vec![res(0), res(1)], vec![res(0), res(0), res(1)], vec![res(1), res(1), res(0), res(0)]] {
        let (gs, _) = graded_partial_bijections(&pts, &z2);
        let rep = epsilon_transfer_report(&gs).unwrap();
        let (s, e) = rep.zero_e_unitary.unwrap();
        assert_eq!(s, e);
        assert!(rep.ideal_correspondence.iter().all(|c| c.bijective && c.inverse_map_ok));
    }
}

#[test]
fn graded_green_refines_plain_green() {
    let trivial = FiniteGraded::trivial(symmetric_inverse_monoid(3, &["a", "b", "c"]).0, GradeGroup::Cyclic(2));
    let g = graded_green(&trivial);
    let plain = green_classes(&trivial.sg);
    assert_eq!(g.l, plain.l);
    assert_eq!(g.d, plain.d);

    let gs = symmetric_inverse_monoid_xy_graded();
    let g = graded_green(&gs);
    assert!(g.green_lemma_holds && g.left_shift_form_holds);
    let plain = green_classes(&gs.sg);
    for class in &g.l {
        let degs: BTreeSet<_> = class.iter().map(|&x| gs.deg(x)).collect();
        assert_eq!(degs.len(), 1);
        assert!(plain.l.iter().any(|c| class.iter().all(|x| c.contains(x))));
    }
}

#[test]
fn graded_hom_examples() {
    let gs = symmetric_inverse_monoid_xy_graded();
    assert!(check_graded_hom(|&a: &usize| a, &gs, &gs, 0).is_holds());
    assert!(check_graded_hom(|_: &usize| 0usize, &gs, &gs, 0).is_holds());
    // Conjugation by τ is an automorphism preserving degrees.
    let tau = gs.sg.index_of("τ").unwrap();
    assert!(check_graded_hom(|&a: &usize| gs.sg.m(gs.sg.m(tau, a), tau), &gs, &gs, 0).is_holds());
    // The identity into the trivially graded copy shifts degrees of τ.
    let flat = FiniteGraded::trivial(gs.sg.clone(), GradeGroup::Cyclic(2));
    let v = check_graded_hom(|&a: &usize| a, &gs, &flat, 0);
    assert_eq!(v.status, Status::Fails);
}

fn point_degrees() -> impl Strategy<Value = (u64, Vec<u64>)> {
    (2u64..4).prop_flat_map(|n| (Just(n), proptest::collection::vec(0..n, 1..5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn graded_partial_bijections_match_the_counting_criteria((n, pts) in point_degrees()) {
        let group = GradeGroup::Cyclic(n);
        let degrees: Vec<GroupElement> = pts.iter().map(|&d| res(d)).collect();
        let (gs, _) = graded_partial_bijections(&degrees, &group);
        prop_assert!(check_grading(&gs, 0).is_holds());
        let counts: Vec<usize> = (0..n).map(|d| pts.iter().filter(|&&p| p == d).count()).collect();
        let strong = is_strongly_graded(&gs, Bounds::default());
        let local = is_locally_strongly_graded(&gs, Bounds::default()).unwrap();
        prop_assert_eq!(strong.is_holds(), counts.iter().all(|&c| c == counts[0]));
        prop_assert_eq!(local.is_holds(), counts.iter().all(|&c| c > 0));
        if strong.is_holds() {
            prop_assert!(local.is_holds());
        }
        let eq = strong_equivalents(&gs).unwrap();
        prop_assert!(eq.values().all(|&b| b == strong.is_holds()), "{:?}", eq);
        // Components are disjoint and multiply into the right component.
        let comps = components_and_support(&gs, 0);
        let mut seen = BTreeSet::new();
        for elems in comps.components.values() {
            for e in elems {
                prop_assert!(seen.insert(*e));
            }
        }
    }
}
