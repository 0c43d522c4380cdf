// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet};

use grade_group::GroupElement;
use serde::Serialize;

use crate::{GradedSemigroup, Verdict};

/// Validates the degree map on the enumerated fragment: multiplicativity on
/// nonzero products, degree ε on idempotents and `deg(s⁻¹) = deg(s)⁻¹`.
pub fn check_grading<G: GradedSemigroup>(gs: &G, bound: usize) -> Verdict {
    let group = gs.group();
    let elems: Vec<G::Elem> = gs.enumerate(bound).into_iter().filter(|a| !gs.is_zero(a)).collect();
    let mut degs = Vec::with_capacity(elems.len());
    for a in &elems {
        match gs.degree(a) {
            Some(d) if group.contains(&d) => degs.push(d),
            Some(d) => {
                return Verdict::fails(format!("degree {d} is not in {group}"), vec![gs.render(a)])
                    .with_bound("element_bound", bound)
            }
            None => {
                return Verdict::fails("nonzero element without degree", vec![gs.render(a)])
                    .with_bound("element_bound", bound)
            }
        }
    }
    for (i, a) in elems.iter().enumerate() {
        if gs.is_idempotent(a) && !group.is_identity(&degs[i]) {
            return Verdict::fails(format!("idempotent of degree {}", degs[i]), vec![gs.render(a)])
                .with_bound("element_bound", bound);
        }
        if let Some(inv) = gs.inverse(a) {
            if let Some(d) = gs.degree(&inv) {
                if d != group.inv(&degs[i]) {
                    return Verdict::fails("deg(s⁻¹) ≠ deg(s)⁻¹", vec![gs.render(a), gs.render(&inv)])
                        .with_bound("element_bound", bound);
                }
            }
        }
        for (j, b) in elems.iter().enumerate() {
            let ab = gs.mul(a, b);
            if gs.is_zero(&ab) {
                continue;
            }
            let expected = group.op(&degs[i], &degs[j]);
            if gs.degree(&ab).as_ref() != Some(&expected) {
                return Verdict::fails(
                    format!("deg(st) ≠ deg(s)deg(t): expected {expected}"),
                    vec![gs.render(a), gs.render(b)],
                )
                .with_bound("element_bound", bound);
            }
        }
    }
    let v = Verdict::holds(format!("degree map multiplicative on {} nonzero elements", elems.len()))
        .with_bound("element_bound", bound);
    if gs.is_finite() {
        v
    } else {
        v.fragment()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Components<E: Ord> {
    /// Nonzero elements of each degree; zero belongs to every component.
    pub components: BTreeMap<GroupElement, BTreeSet<E>>,
    pub support: BTreeSet<GroupElement>,
    pub fragment: bool,
}

impl<E: Ord> Components<E> {
    pub fn get(&self, alpha: &GroupElement) -> Option<&BTreeSet<E>> {
        self.components.get(alpha)
    }
}

pub fn components_and_support<G: GradedSemigroup>(gs: &G, bound: usize) -> Components<G::Elem> {
    let mut components: BTreeMap<GroupElement, BTreeSet<G::Elem>> = BTreeMap::new();
    for a in gs.enumerate(bound) {
        if let Some(d) = gs.degree(&a) {
            if !gs.is_zero(&a) {
                components.entry(d).or_default().insert(a);
            }
        }
    }
    let support = components.keys().cloned().collect();
    Components { components, support, fragment: !gs.is_finite() }
}

/// Checks that `f` is a zero-preserving homomorphism preserving degrees on
/// the enumerated fragment of `source`.
pub fn check_graded_hom<S: GradedSemigroup, T: GradedSemigroup>(
    f: impl Fn(&S::Elem) -> T::Elem,
    source: &S,
    target: &T,
    bound: usize,
) -> Verdict {
    let elems = source.enumerate(bound);
    if !target.is_zero(&f(&source.zero())) {
        return Verdict::fails("f(0) ≠ 0", vec![]).with_bound("element_bound", bound);
    }
    let images: Vec<T::Elem> = elems.iter().map(&f).collect();
    for (a, fa) in elems.iter().zip(&images) {
        if source.is_zero(a) || target.is_zero(fa) {
            continue;
        }
        if source.degree(a) != target.degree(fa) {
            return Verdict::fails("degree not preserved", vec![source.render(a), target.render(fa)])
                .with_bound("element_bound", bound);
        }
    }
    for (a, fa) in elems.iter().zip(&images) {
        for (b, fb) in elems.iter().zip(&images) {
            if f(&source.mul(a, b)) != target.mul(fa, fb) {
                return Verdict::fails("f(st) ≠ f(s)f(t)", vec![source.render(a), source.render(b)])
                    .with_bound("element_bound", bound);
            }
        }
    }
    let v = Verdict::holds("graded homomorphism").with_bound("element_bound", bound);
    if source.is_finite() {
        v
    } else {
        v.fragment()
    }
}
