// SPDX-License-Identifier: Apache-2.0

//! Graded versions of the standard small semigroups.

use grade_group::{GradeGroup, GroupElement};
use semigroup_core::fixtures::{group_with_zero, interval_semigroup, symmetric_inverse_monoid_xy};
use semigroup_core::{FiniteSemigroup, PartialBijection};

use crate::FiniteGraded;

/// `ℤ/n ∪ {0}` graded by the identity map `a^k ↦ k`.
pub fn cyclic_with_zero_identity_graded(n: usize) -> FiniteGraded {
    let group = GradeGroup::Cyclic(n as u64);
    FiniteGraded::from_fn(group_with_zero(n), group, |x| GroupElement::Residue(x.saturating_sub(1) as u64))
        .expect("identity grading")
}

/// `ℤ/n ∪ {0}` with every nonzero element in degree ε of `group`.
pub fn cyclic_with_zero_trivially_graded(n: usize, group: GradeGroup) -> FiniteGraded {
    FiniteGraded::trivial(group_with_zero(n), group)
}

/// The nontrivial ℤ/2-grading of I({x,y}): `1, θxx, θyy` in degree 0 and
/// `τ, θxy, θyx` in degree 1.
pub fn symmetric_inverse_monoid_xy_graded() -> FiniteGraded {
    let (sg, _) = symmetric_inverse_monoid_xy();
    let odd = ["τ", "θxy", "θyx"];
    let degrees = (0..sg.order()).map(|a| Some(GroupElement::Residue(u64::from(odd.contains(&sg.label(a)))))).collect();
    FiniteGraded::new(sg, GradeGroup::Cyclic(2), degrees).expect("valid grading")
}

/// The interval semigroup on `[lo, hi]` graded by `(p,q) ↦ p − q` into ℤ.
pub fn interval_graded(lo: i64, hi: i64) -> FiniteGraded {
    let (sg, pairs) = interval_semigroup(lo, hi);
    FiniteGraded::from_fn(sg, GradeGroup::Integers, |a| {
        if a == 0 {
            GroupElement::Int(0)
        } else {
            let (p, q) = pairs[a - 1];
            GroupElement::Int(p - q)
        }
    })
    .expect("interval grading")
}

/// `I^gr(X)` for a finite set `X` whose points carry the given degrees: the
/// partial bijections `φ` with `deg φ(x) = α·deg x` on the domain, for some
/// `α` (the degree of `φ`). Returns the maps alongside the graded semigroup.
pub fn graded_partial_bijections(
    point_degrees: &[GroupElement],
    group: &GradeGroup,
) -> (FiniteGraded, Vec<PartialBijection>) {
    let n = point_degrees.len();
    let homogeneous_degree = |p: &PartialBijection| -> Option<Option<GroupElement>> {
        let mut alpha: Option<GroupElement> = None;
        for x in p.domain() {
            let y = p.apply(x).expect("domain");
            let a = group.div(&point_degrees[y], &point_degrees[x]);
            match &alpha {
                None => alpha = Some(a),
                Some(b) if *b != a => return None,
                _ => {}
            }
        }
        Some(alpha)
    };
    let mut maps = Vec::new();
    let mut degrees = Vec::new();
    for p in PartialBijection::all(n) {
        if let Some(d) = homogeneous_degree(&p) {
            maps.push(p);
            degrees.push(d);
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let labels = maps.iter().map(|m| m.render(&names)).collect();
    let index = |p: &PartialBijection| maps.iter().position(|q| q == p).expect("I^gr(X) is closed");
    let sg = FiniteSemigroup::from_fn(labels, 0, |a, b| index(&maps[a].compose(&maps[b]))).expect("I^gr(X)");
    (FiniteGraded::new(sg, group.clone(), degrees).expect("homogeneous maps"), maps)
}
