// SPDX-License-Identifier: Apache-2.0

//! The smash product ring `A#Γ` of a graded ring, with
//! `(a P_α)(b P_β) = a·b_{αβ⁻¹} P_β`, and the isomorphism `A[S#Γ] ≅ A[S]#Γ`.

use std::collections::{BTreeMap, BTreeSet};

use constructions::{Smash, SmashElement};
use grade_group::GroupElement;
use grading::FiniteGraded;
use serde::Serialize;

use crate::graded::homogeneous_parts;
use crate::ring::{RingElement, SemigroupRing};
use crate::scalar::Field;

/// `Σ_α a^(α) P_α`, zero coefficients omitted.
pub type SmashRingElement = BTreeMap<GroupElement, RingElement<usize>>;

/// `A[S]#Γ` for finite graded `S`, over the levels `Γ.enumerate(group_bound)`.
pub struct SmashRing<'a> {
    pub gs: &'a FiniteGraded,
    pub ring: SemigroupRing<'a, FiniteGraded>,
}

impl<'a> SmashRing<'a> {
    pub fn new(gs: &'a FiniteGraded, field: Field) -> Self {
        Self { gs, ring: SemigroupRing::new(gs, field) }
    }

    pub fn add(&self, x: &SmashRingElement, y: &SmashRingElement) -> SmashRingElement {
        let mut out = x.clone();
        for (beta, b) in y {
            let sum = self.ring.add(out.get(beta).unwrap_or(&RingElement::zero()), b);
            insert_nonzero(&mut out, beta.clone(), sum);
        }
        out
    }

    pub fn mul(&self, x: &SmashRingElement, y: &SmashRingElement) -> SmashRingElement {
        let group = &self.gs.group;
        let mut out = SmashRingElement::new();
        for (alpha, a) in x {
            for (beta, b) in y {
                let parts = homogeneous_parts(self.gs, b);
                let Some(part) = parts.get(&group.div(alpha, beta)) else { continue };
                let term = BTreeMap::from([(beta.clone(), self.ring.mul(a, part))]);
                out = self.add(&out, &term);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Degrees of the nonzero homogeneous pieces: `a P_α` has degree `γ` for `a ∈ A_γ`.
    pub fn degrees(&self, x: &SmashRingElement) -> BTreeSet<GroupElement> {
        x.values().flat_map(|a| homogeneous_parts(self.gs, a).into_keys()).collect()
    }

    pub fn render(&self, x: &SmashRingElement) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter().map(|(a, r)| format!("({})P_{a}", self.ring.render(r))).collect::<Vec<_>>().join(" + ")
    }
}

fn insert_nonzero(out: &mut SmashRingElement, k: GroupElement, v: RingElement<usize>) {
    if v.is_zero() {
        out.remove(&k);
    } else {
        out.insert(k, v);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SmashIsoReport {
    pub field: String,
    pub levels: usize,
    /// Basis size of `A[S#Γ]` on the stored levels.
    pub domain_dim: usize,
    /// `|S ∖ 0| · levels`, the basis size of `A[S]#Γ`.
    pub target_dim: usize,
    pub zero_to_zero: bool,
    pub additive: bool,
    pub multiplicative: bool,
    pub bijective: bool,
    pub graded: bool,
    pub target_associative: bool,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

impl SmashIsoReport {
    pub fn ok(&self) -> bool {
        self.zero_to_zero
            && self.additive
            && self.multiplicative
            && self.bijective
            && self.graded
            && self.target_associative
    }
}

/// `φ(Σ a^(sP_α) sP_α) = Σ_α (Σ_s a^(sP_α) s) P_α`.
pub fn smash_ring_map(r: &SmashRing<'_>, x: &RingElement<SmashElement<usize>>) -> SmashRingElement {
    let mut out = SmashRingElement::new();
    for (e, c) in x.terms() {
        let SmashElement::Elem(s, alpha) = e else { unreachable!("ring support avoids zero") };
        let term = BTreeMap::from([(alpha.clone(), r.ring.term(c.clone(), *s))]);
        out = r.add(&out, &term);
    }
    out
}

/// Verifies `φ: A[S#Γ] → A[S]#Γ` on all basis elements and basis pairs.
pub fn smash_ring_iso(gs: &FiniteGraded, field: Field, group_bound: usize) -> SmashIsoReport {
    let smash = Smash::new(gs.clone(), group_bound);
    let domain = SemigroupRing::new(&smash, field);
    let target = SmashRing::new(gs, field);
    let levels = smash.levels().to_vec();
    let basis: Vec<SmashElement<usize>> =
        gs.sg.nonzero().flat_map(|s| levels.iter().map(move |a| SmashElement::Elem(s, a.clone()))).collect();
    let images: Vec<SmashRingElement> =
        basis.iter().map(|b| smash_ring_map(&target, &domain.basis(b.clone()))).collect();
    let mut failures = Vec::new();
    let render = |e: &SmashElement<usize>| match e {
        SmashElement::Zero => "0".to_string(),
        SmashElement::Elem(s, a) => format!("{}P_{a}", gs.sg.label(*s)),
    };

    let zero_to_zero = smash_ring_map(&target, &domain.zero()).is_empty();

    let distinct: BTreeSet<&SmashRingElement> = images.iter().collect();
    let single_terms = images.iter().all(|x| x.len() == 1 && x.values().all(|r| r.len() == 1));
    let target_dim = gs.sg.nonzero().count() * levels.len();
    let bijective = single_terms && distinct.len() == basis.len() && basis.len() == target_dim;

    let graded = basis.iter().zip(&images).all(|(b, img)| {
        let want = gs.deg(match b {
            SmashElement::Elem(s, _) => *s,
            SmashElement::Zero => unreachable!(),
        });
        let ok = target.degrees(img).into_iter().collect::<Vec<_>>() == want.into_iter().cloned().collect::<Vec<_>>();
        if !ok {
            failures.push(format!("degree of φ({}) differs", render(b)));
        }
        ok
    });

    let mut additive = true;
    let mut multiplicative = true;
    let mut pairs = 0;
    // A coefficient other than 1 where the field has one, so scalars are exercised.
    let two = Some(field.from_int(2)).filter(|c| !field.is_zero(c)).unwrap_or_else(|| field.one());
    for x in &basis {
        for (j, y) in basis.iter().enumerate() {
            pairs += 1;
            let (ex, ey) = (domain.term(two.clone(), x.clone()), domain.basis(y.clone()));
            if smash_ring_map(&target, &domain.add(&ex, &ey)) != target.add(&smash_ring_map(&target, &ex), &images[j]) {
                additive = false;
                failures.push(format!("φ(2{} + {}) is not additive", render(x), render(y)));
            }
            let lhs = smash_ring_map(&target, &domain.mul(&ex, &ey));
            let rhs = target.mul(&smash_ring_map(&target, &ex), &images[j]);
            if lhs != rhs {
                multiplicative = false;
                failures.push(format!(
                    "φ(2{}·{}) = {} but φ·φ = {}",
                    render(x),
                    render(y),
                    target.render(&lhs),
                    target.render(&rhs)
                ));
            }
        }
    }

    let target_associative = images.iter().all(|a| {
        images.iter().all(|b| {
            let ab = target.mul(a, b);
            images.iter().all(|c| target.mul(&ab, c) == target.mul(a, &target.mul(b, c)))
        })
    });

    SmashIsoReport {
        field: field.to_string(),
        levels: levels.len(),
        domain_dim: basis.len(),
        target_dim,
        zero_to_zero,
        additive,
        multiplicative,
        bijective,
        graded,
        target_associative,
        pairs_checked: pairs,
        failures,
    }
}
