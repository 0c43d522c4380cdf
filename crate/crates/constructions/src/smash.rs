// SPDX-License-Identifier: Apache-2.0

//! The smash product `S#Γ = {sP_α} ∪ {0}` with
//! `(sP_α)(tP_β) = stP_β` when `st ≠ 0` and `deg(t) = αβ⁻¹`, and `0` otherwise.

use std::collections::BTreeSet;

use grade_group::{GradeGroup, GroupElement};
use grading::{check_grading, GradedSemigroup, Verdict};
use semigroup_core::{inverse_structure, local_units_report, Semigroup};
use serde::Serialize;

use crate::ConstructionError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmashElement<E> {
    Zero,
    /// `sP_α` with `s ≠ 0`.
    Elem(E, GroupElement),
}

/// `S#Γ` over a graded backend. For infinite `Γ` the carrier is lazy and
/// enumeration only visits the stored levels.
#[derive(Debug, Clone)]
pub struct Smash<G> {
    base: G,
    levels: Vec<GroupElement>,
}

impl<G: GradedSemigroup> Smash<G> {
    /// Levels are `Γ.enumerate(group_bound)`: all of `Γ` when it is finite.
    pub fn new(base: G, group_bound: usize) -> Self {
        let levels = base.group().enumerate(group_bound);
        Self { base, levels }
    }

    pub fn with_levels(base: G, levels: Vec<GroupElement>) -> Self {
        Self { base, levels }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn levels(&self) -> &[GroupElement] {
        &self.levels
    }

    /// `sP_α`, collapsing to zero when `s = 0`.
    pub fn elem(&self, s: G::Elem, alpha: GroupElement) -> SmashElement<G::Elem> {
        if self.base.is_zero(&s) {
            SmashElement::Zero
        } else {
            SmashElement::Elem(s, alpha)
        }
    }
}

/// Builds `S#Γ` after checking the grading of `S` on the given fragment.
pub fn smash_build<G: GradedSemigroup>(
    base: G,
    group_bound: usize,
    element_bound: usize,
) -> Result<Smash<G>, ConstructionError> {
    let v = check_grading(&base, element_bound);
    if v.is_fails() {
        return Err(ConstructionError::InvalidGrading(format!("{}: {}", v.certificate, v.witness.join(", "))));
    }
    Ok(Smash::new(base, group_bound))
}

impl<G: GradedSemigroup> Semigroup for Smash<G> {
    type Elem = SmashElement<G::Elem>;

    fn zero(&self) -> Self::Elem {
        SmashElement::Zero
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (SmashElement::Elem(s, alpha), SmashElement::Elem(t, beta)) = (a, b) else {
            return SmashElement::Zero;
        };
        let group = self.base.group();
        if self.base.degree(t).as_ref() != Some(&group.div(alpha, beta)) {
            return SmashElement::Zero;
        }
        self.elem(self.base.mul(s, t), beta.clone())
    }

    fn enumerate(&self, bound: usize) -> Vec<Self::Elem> {
        let mut out = vec![SmashElement::Zero];
        for s in self.base.enumerate(bound) {
            if self.base.is_zero(&s) {
                continue;
            }
            out.extend(self.levels.iter().map(|a| SmashElement::Elem(s.clone(), a.clone())));
        }
        out
    }

    fn is_finite(&self) -> bool {
        self.base.is_finite() && self.base.group().is_finite()
    }

    /// `(sP_α)⁻¹ = s⁻¹P_{deg(s)α}`.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        match a {
            SmashElement::Zero => Some(SmashElement::Zero),
            SmashElement::Elem(s, alpha) => {
                let inv = self.base.inverse(s)?;
                let d = self.base.degree(s)?;
                Some(SmashElement::Elem(inv, self.base.group().op(&d, alpha)))
            }
        }
    }

    fn size(&self, a: &Self::Elem) -> usize {
        match a {
            SmashElement::Zero => 0,
            SmashElement::Elem(s, _) => self.base.size(s),
        }
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a {
            SmashElement::Zero => "0".into(),
            SmashElement::Elem(s, alpha) => format!("{}P_{alpha}", self.base.render(s)),
        }
    }
}

impl<G: GradedSemigroup> GradedSemigroup for Smash<G> {
    fn group(&self) -> &GradeGroup {
        self.base.group()
    }

    fn degree(&self, a: &Self::Elem) -> Option<GroupElement> {
        match a {
            SmashElement::Zero => None,
            SmashElement::Elem(s, _) => self.base.degree(s),
        }
    }
}

/// `τ_α(sP_β) = sP_{βα}`.
pub fn smash_shift<G: GradedSemigroup>(
    sm: &Smash<G>,
    x: &SmashElement<G::Elem>,
    alpha: &GroupElement,
) -> SmashElement<G::Elem> {
    match x {
        SmashElement::Zero => SmashElement::Zero,
        SmashElement::Elem(s, beta) => SmashElement::Elem(s.clone(), sm.base.group().op(beta, alpha)),
    }
}

/// Checks that `τ_α` is an injective homomorphism on the fragment, and
/// bijective on it when `Γ` is finite.
pub fn verify_shift<G: GradedSemigroup>(sm: &Smash<G>, alpha: &GroupElement, bound: usize) -> Verdict {
    let elems = sm.enumerate(bound);
    let images: Vec<_> = elems.iter().map(|x| smash_shift(sm, x, alpha)).collect();
    for (x, tx) in elems.iter().zip(&images) {
        for (y, ty) in elems.iter().zip(&images) {
            if smash_shift(sm, &sm.mul(x, y), alpha) != sm.mul(tx, ty) {
                return Verdict::fails("τ(xy) ≠ τ(x)τ(y)", vec![sm.render(x), sm.render(y)])
                    .with_bound("element_bound", bound);
            }
        }
    }
    let distinct: BTreeSet<_> = images.iter().collect();
    if distinct.len() != images.len() {
        return Verdict::fails("τ is not injective", vec![]).with_bound("element_bound", bound);
    }
    let v = Verdict::holds(format!("τ_{alpha} is an injective homomorphism")).with_bound("element_bound", bound);
    if sm.is_finite() {
        let domain: BTreeSet<_> = elems.iter().collect();
        if distinct != domain {
            return Verdict::fails("τ is not onto", vec![]);
        }
        v
    } else {
        v.fragment()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SmashReport {
    pub idempotents: Vec<String>,
    /// `E(S#Γ) = {uP_α : u ∈ E(S)∖{0}} ∪ {0}` on the fragment.
    pub idempotents_match: bool,
    pub base_inverse: bool,
    pub smash_inverse: bool,
    pub base_local_units: bool,
    pub smash_local_units: bool,
    pub element_bound: usize,
    pub levels: usize,
    pub fragment: bool,
}

impl SmashReport {
    /// Inverse and local-unit status agree between `S` and `S#Γ`.
    pub fn transfers(&self) -> bool {
        self.idempotents_match
            && self.base_inverse == self.smash_inverse
            && self.base_local_units == self.smash_local_units
    }
}

pub fn smash_report<G: GradedSemigroup>(sm: &Smash<G>, bound: usize) -> SmashReport {
    let base_inv = inverse_structure(&sm.base, bound);
    let base_units = local_units_report(&sm.base, bound);
    let expected: BTreeSet<_> = base_inv
        .idempotents
        .iter()
        .filter(|u| !sm.base.is_zero(u))
        .flat_map(|u| sm.levels.iter().map(move |a| SmashElement::Elem(u.clone(), a.clone())))
        .chain(std::iter::once(SmashElement::Zero))
        .collect();
    let idempotents: BTreeSet<_> = sm.enumerate(bound).into_iter().filter(|x| sm.is_idempotent(x)).collect();
    let (smash_inverse, smash_local_units) = if sm.is_finite() {
        (inverse_structure(sm, bound).is_inverse, local_units_report(sm, bound).has_local_units)
    } else {
        // The level window is not closed under the operations, so check the
        // explicit witnesses instead: s⁻¹P_{deg(s)α} and (uP_{deg(s)α}, vP_α).
        let elems = sm.enumerate(bound);
        let inverse = base_inv.is_inverse
            && elems.iter().all(|x| {
                sm.inverse(x).is_some_and(|y| sm.mul(&sm.mul(x, &y), x) == *x && sm.mul(&sm.mul(&y, x), &y) == y)
            });
        let units = base_units.has_local_units
            && elems.iter().all(|x| {
                let SmashElement::Elem(s, alpha) = x else { return true };
                let Some((u, v)) = base_units.witnesses.get(s) else { return false };
                let d = sm.base.degree(s).expect("nonzero");
                let left = SmashElement::Elem(u.clone(), sm.base.group().op(&d, alpha));
                let right = SmashElement::Elem(v.clone(), alpha.clone());
                sm.mul(&left, x) == *x && sm.mul(x, &right) == *x
            });
        (inverse, units)
    };
    SmashReport {
        idempotents: idempotents.iter().map(|e| sm.render(e)).collect(),
        idempotents_match: expected == idempotents,
        base_inverse: base_inv.is_inverse,
        smash_inverse,
        base_local_units: base_units.has_local_units,
        smash_local_units,
        element_bound: bound,
        levels: sm.levels.len(),
        fragment: !sm.is_finite(),
    }
}
