// SPDX-License-Identifier: Apache-2.0

//! The stable Rees semigroup `S_Γ = {e_{αβ}(s)}` with
//! `e_{αβ}(s)·e_{δγ}(t) = e_{αγ}(st)` when `β = δ`, graded by
//! `deg e_{αβ}(s) = α⁻¹·deg(s)·β`, and its comparison with `S#Γ`.

use std::collections::BTreeSet;

use grade_group::{GradeGroup, GroupElement};
use grading::{check_grading, is_strongly_graded, Bounds, GradedSemigroup, Verdict};
use semigroup_core::{inverse_structure, local_units_report, Semigroup};
use serde::Serialize;

use crate::smash::{Smash, SmashElement};
use crate::ConstructionError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StableReesElement<E> {
    Zero,
    /// `e_{αβ}(s)` with `s ≠ 0`.
    Elem(GroupElement, GroupElement, E),
}

#[derive(Debug, Clone)]
pub struct StableRees<G> {
    base: G,
    levels: Vec<GroupElement>,
}

impl<G: GradedSemigroup> StableRees<G> {
    pub fn new(base: G, group_bound: usize) -> Self {
        let levels = base.group().enumerate(group_bound);
        Self { base, levels }
    }

    pub fn base(&self) -> &G {
        &self.base
    }

    pub fn levels(&self) -> &[GroupElement] {
        &self.levels
    }

    pub fn elem(&self, alpha: GroupElement, beta: GroupElement, s: G::Elem) -> StableReesElement<G::Elem> {
        if self.base.is_zero(&s) {
            StableReesElement::Zero
        } else {
            StableReesElement::Elem(alpha, beta, s)
        }
    }
}

pub fn stable_rees_build<G: GradedSemigroup>(
    base: G,
    group_bound: usize,
    element_bound: usize,
) -> Result<StableRees<G>, ConstructionError> {
    let v = check_grading(&base, element_bound);
    if v.is_fails() {
        return Err(ConstructionError::InvalidGrading(format!("{}: {}", v.certificate, v.witness.join(", "))));
    }
    Ok(StableRees::new(base, group_bound))
}

impl<G: GradedSemigroup> Semigroup for StableRees<G> {
    type Elem = StableReesElement<G::Elem>;

    fn zero(&self) -> Self::Elem {
        StableReesElement::Zero
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (StableReesElement::Elem(alpha, beta, s), StableReesElement::Elem(delta, gamma, t)) if beta == delta => {
                self.elem(alpha.clone(), gamma.clone(), self.base.mul(s, t))
            }
            _ => StableReesElement::Zero,
        }
    }

    fn enumerate(&self, bound: usize) -> Vec<Self::Elem> {
        let mut out = vec![StableReesElement::Zero];
        for s in self.base.enumerate(bound) {
            if self.base.is_zero(&s) {
                continue;
            }
            for a in &self.levels {
                for b in &self.levels {
                    out.push(StableReesElement::Elem(a.clone(), b.clone(), s.clone()));
                }
            }
        }
        out
    }

    fn is_finite(&self) -> bool {
        self.base.is_finite() && self.base.group().is_finite()
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        match a {
            StableReesElement::Zero => Some(StableReesElement::Zero),
            StableReesElement::Elem(alpha, beta, s) => {
                Some(StableReesElement::Elem(beta.clone(), alpha.clone(), self.base.inverse(s)?))
            }
        }
    }

    fn size(&self, a: &Self::Elem) -> usize {
        match a {
            StableReesElement::Zero => 0,
            StableReesElement::Elem(_, _, s) => self.base.size(s),
        }
    }

    fn render(&self, a: &Self::Elem) -> String {
        match a {
            StableReesElement::Zero => "0".into(),
            StableReesElement::Elem(alpha, beta, s) => format!("e_{{{alpha},{beta}}}({})", self.base.render(s)),
        }
    }
}

impl<G: GradedSemigroup> GradedSemigroup for StableRees<G> {
    fn group(&self) -> &GradeGroup {
        self.base.group()
    }

    fn degree(&self, a: &Self::Elem) -> Option<GroupElement> {
        let StableReesElement::Elem(alpha, beta, s) = a else { return None };
        let g = self.base.group();
        Some(g.op(&g.op(&g.inv(alpha), &self.base.degree(s)?), beta))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StableReesReport {
    /// `E(S_Γ) = {e_{αα}(u) : u ∈ E(S)∖{0}} ∪ {0}` on the fragment.
    pub idempotents_match: bool,
    pub base_local_units: bool,
    pub local_units: bool,
    pub base_inverse: bool,
    pub inverse: bool,
    pub strongly_graded: Verdict,
    pub element_bound: usize,
    pub levels: usize,
}

pub fn stable_rees_report<G: GradedSemigroup>(sr: &StableRees<G>, bounds: Bounds) -> StableReesReport {
    let bound = bounds.element_bound;
    let base_inv = inverse_structure(&sr.base, bound);
    let inv = inverse_structure(sr, bound);
    let expected: BTreeSet<_> = base_inv
        .idempotents
        .iter()
        .filter(|u| !sr.base.is_zero(u))
        .flat_map(|u| sr.levels.iter().map(move |a| StableReesElement::Elem(a.clone(), a.clone(), u.clone())))
        .chain(std::iter::once(StableReesElement::Zero))
        .collect();
    StableReesReport {
        idempotents_match: expected == inv.idempotents,
        base_local_units: local_units_report(&sr.base, bound).has_local_units,
        local_units: local_units_report(sr, bound).has_local_units,
        base_inverse: base_inv.is_inverse,
        inverse: inv.is_inverse,
        strongly_graded: is_strongly_graded(sr, bounds),
        element_bound: bound,
        levels: sr.levels.len(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoReport {
    pub verdict: Verdict,
    pub domain_size: usize,
    pub homomorphism: bool,
    pub injective: bool,
    /// Every image lies in the ε-component.
    pub lands_in_identity_component: bool,
    /// Every `e_{γα}(s)` of degree ε with `α, γ` among the levels is hit.
    pub onto_identity_component: bool,
    pub element_bound: usize,
    pub group_bound: usize,
}

/// `φ(sP_α) = e_{deg(s)α, α}(s)`.
pub fn smash_to_stable<G: GradedSemigroup>(base: &G, x: &SmashElement<G::Elem>) -> StableReesElement<G::Elem> {
    match x {
        SmashElement::Zero => StableReesElement::Zero,
        SmashElement::Elem(s, alpha) => {
            let d = base.degree(s).expect("nonzero element has a degree");
            StableReesElement::Elem(base.group().op(&d, alpha), alpha.clone(), s.clone())
        }
    }
}

/// Verifies `φ: S#Γ → (S_Γ)_ε` on the fragment of elements of size at most
/// `element_bound` and levels `Γ.enumerate(group_bound)`.
pub fn iso_smash_stable_eps<G: GradedSemigroup>(
    base: &G,
    group_bound: usize,
    element_bound: usize,
) -> Result<IsoReport, ConstructionError> {
    let units = local_units_report(base, element_bound);
    if !units.has_local_units {
        let who = units.failure.unwrap_or_default().iter().map(|e| base.render(e)).collect::<Vec<_>>().join(", ");
        return Err(ConstructionError::NoLocalUnits(who));
    }
    let smash = Smash::new(base, group_bound);
    let stable = StableRees::new(base, group_bound);
    let group = base.group();
    let domain = smash.enumerate(element_bound);
    let images: Vec<_> = domain.iter().map(|x| smash_to_stable(base, x)).collect();

    let mut failure = None;
    'outer: for (x, fx) in domain.iter().zip(&images) {
        for (y, fy) in domain.iter().zip(&images) {
            if smash_to_stable(base, &smash.mul(x, y)) != stable.mul(fx, fy) {
                failure = Some(vec![smash.render(x), smash.render(y)]);
                break 'outer;
            }
        }
    }
    let homomorphism = failure.is_none();
    let image_set: BTreeSet<_> = images.iter().collect();
    let injective = image_set.len() == images.len();
    let lands = images.iter().all(|fx| stable.degree(fx).is_none_or(|d| group.is_identity(&d)));
    let onto = stable
        .enumerate(element_bound)
        .iter()
        .filter(|z| stable.degree(z).is_none_or(|d| group.is_identity(&d)))
        .all(|z| image_set.contains(z));

    let verdict = if homomorphism && injective && lands && onto {
        let v = Verdict::holds("φ(sP_α) = e_{deg(s)α,α}(s) is a bijective homomorphism onto (S_Γ)_ε")
            .with_bound("element_bound", element_bound)
            .with_bound("group_bound", group_bound);
        if smash.is_finite() {
            v
        } else {
            v.fragment()
        }
    } else {
        let what = [(homomorphism, "homomorphism"), (injective, "injective"), (lands, "lands in ε"), (onto, "onto ε")]
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, w)| *w)
            .collect::<Vec<_>>()
            .join(", ");
        Verdict::fails(format!("φ fails: {what}"), failure.unwrap_or_default())
    };
    Ok(IsoReport {
        verdict,
        domain_size: domain.len(),
        homomorphism,
        injective,
        lands_in_identity_component: lands,
        onto_identity_component: onto,
        element_bound,
        group_bound,
    })
}
