// SPDX-License-Identifier: Apache-2.0

//! Gradings on `A[S]` for finite `S`: the grading induced by a semigroup
//! grading, and external gradings given by a basis of each component.

use std::collections::{BTreeMap, BTreeSet};

use grade_group::{GradeGroup, GroupElement};
use grading::{check_grading, is_strongly_graded, Bounds, FiniteGraded, Verdict};
use semigroup_core::FiniteSemigroup;
use serde::Serialize;

use crate::linalg::{rank, solve, Vector};
use crate::ring::{RingElement, SemigroupRing};
use crate::scalar::Field;
use crate::AlgebraError;

/// `a = Σ_α a_α` with `a_α ∈ A[S_α]`; only nonzero parts are listed.
pub fn homogeneous_parts(gs: &FiniteGraded, a: &RingElement<usize>) -> BTreeMap<GroupElement, RingElement<usize>> {
    let mut parts: BTreeMap<GroupElement, Vector<usize>> = BTreeMap::new();
    for (s, c) in a.terms() {
        let d = gs.deg(*s).expect("support avoids zero").clone();
        parts.entry(d).or_default().insert(*s, c.clone());
    }
    parts.into_iter().map(|(d, v)| (d, RingElement::from_vector(v))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct InducedGrading {
    pub field: String,
    /// Degree ↦ labels of the standard basis of `A[S_α]`.
    pub components: BTreeMap<String, Vec<String>>,
    /// `A[S]_α A[S]_β ⊆ A[S]_{αβ}` on all basis pairs.
    pub closed: bool,
    pub semigroup_strong: Verdict,
    pub ring_strong: Verdict,
    /// Both verdicts are decided and equal.
    pub agree: bool,
}

pub fn induced_grading(gs: &FiniteGraded, field: Field) -> Result<InducedGrading, AlgebraError> {
    let check = check_grading(gs, 0);
    if check.is_fails() {
        return Err(AlgebraError::InvalidGrading(format!("{}: {}", check.certificate, check.witness.join(", "))));
    }
    let ring = SemigroupRing::new(&gs.sg, field);
    let sg = &gs.sg;
    let group = &gs.group;
    let components = gs
        .components()
        .into_iter()
        .map(|(d, set)| (d.to_string(), set.into_iter().map(|s| sg.label(s).to_string()).collect()))
        .collect();
    let closed = sg.nonzero().all(|s| {
        sg.nonzero().all(|t| {
            let parts = homogeneous_parts(gs, &ring.mul(&ring.basis(s), &ring.basis(t)));
            let want = group.op(gs.deg(s).expect("nonzero"), gs.deg(t).expect("nonzero"));
            parts.keys().all(|d| *d == want)
        })
    });
    let semigroup_strong = is_strongly_graded(gs, Bounds::default());
    let ring_strong = ring_strongly_graded(gs, field);
    let agree = semigroup_strong.status == ring_strong.status && !ring_strong.is_unknown();
    Ok(InducedGrading { field: field.to_string(), components, closed, semigroup_strong, ring_strong, agree })
}

/// A homogeneous basis of `A[S_α]` other than the standard one: the running
/// sums `s_1, s_1 + s_2, ...`, so that membership in `A_α A_β` is a genuine
/// linear-algebra question rather than a lookup of semigroup products.
fn skewed_basis(ring: &SemigroupRing<'_, FiniteSemigroup>, elems: &[usize]) -> Vec<RingElement<usize>> {
    let mut acc = ring.zero();
    elems
        .iter()
        .map(|&s| {
            acc = ring.add(&acc, &ring.basis(s));
            acc.clone()
        })
        .collect()
}

/// Decides `A_α A_β = A_{αβ}` for all `α, β` on the ring side only: every
/// standard basis vector of `A_{αβ}` must be a combination of products of
/// homogeneous basis elements.
pub fn ring_strongly_graded(gs: &FiniteGraded, field: Field) -> Verdict {
    let ring = SemigroupRing::new(&gs.sg, field);
    let group = &gs.group;
    let components = gs.components();
    let support: BTreeSet<&GroupElement> = components.keys().collect();
    let Some(&gamma) = support.iter().next() else {
        return Verdict::holds("A[S] = 0 is strongly graded");
    };
    if !group.is_finite() {
        // A finite S has finite support, so some A_α vanishes and A_α A_{α⁻¹γ} = 0 ≠ A_γ.
        let alpha = (1..)
            .flat_map(|k| group.enumerate(k))
            .find(|a| !support.contains(a))
            .expect("an infinite group leaves its finite support");
        let beta = group.div(&group.inv(&alpha), &group.inv(gamma));
        return Verdict::fails(
            format!("A[S]_{alpha} = 0 while A[S]_{gamma} ≠ 0, so A_{alpha}·A_{beta} ≠ A_{gamma}"),
            vec![alpha.to_string(), beta.to_string()],
        );
    }
    let basis: BTreeMap<&GroupElement, Vec<RingElement<usize>>> =
        components.iter().map(|(d, set)| (d, skewed_basis(&ring, &set.iter().copied().collect::<Vec<_>>()))).collect();
    let alphas = group.enumerate(0);
    for alpha in &alphas {
        for beta in &alphas {
            let target = group.op(alpha, beta);
            let Some(wanted) = components.get(&target) else { continue };
            let (Some(left), Some(right)) = (basis.get(alpha), basis.get(beta)) else {
                let t = *wanted.iter().next().expect("components are nonempty");
                return Verdict::fails(
                    format!("A[S]_{alpha}·A[S]_{beta} = 0 misses {}", gs.sg.label(t)),
                    vec![alpha.to_string(), beta.to_string(), gs.sg.label(t).to_string()],
                );
            };
            let products: Vec<Vector<usize>> =
                left.iter().flat_map(|x| right.iter().map(|y| ring.mul(x, y).as_vector().clone())).collect();
            if rank(&field, &products) == wanted.len() {
                continue;
            }
            let missing = wanted
                .iter()
                .find(|&&t| solve(&field, &products, ring.basis(t).as_vector()).is_none())
                .expect("rank deficit leaves some basis vector outside the span");
            return Verdict::fails(
                format!("{} ∉ A[S]_{alpha}·A[S]_{beta}", gs.sg.label(*missing)),
                vec![alpha.to_string(), beta.to_string(), gs.sg.label(*missing).to_string()],
            );
        }
    }
    Verdict::holds(format!("A[S]_αA[S]_β = A[S]_αβ for all α, β ∈ {}", group_name(group)))
}

fn group_name(group: &GradeGroup) -> String {
    match group.order() {
        Some(n) => format!("Γ of order {n}"),
        None => "Γ".into(),
    }
}

/// A grading of `A[S]` given by a basis of each homogeneous component.
#[derive(Debug, Clone)]
pub struct ExternalGrading {
    pub group: GradeGroup,
    pub components: Vec<(GroupElement, Vec<RingElement<usize>>)>,
}

impl ExternalGrading {
    /// Checks that the component bases together form a basis of `A[S]` and
    /// that basis products land in the product degree.
    pub fn validate(&self, ring: &SemigroupRing<'_, FiniteSemigroup>) -> Result<(), AlgebraError> {
        let field = ring.field;
        let all: Vec<Vector<usize>> = self.all_vectors();
        let dim = ring.sg.nonzero().count();
        if all.len() != dim || rank(&field, &all) != dim {
            return Err(AlgebraError::InvalidGrading(format!(
                "{} component vectors of rank {} do not form a basis of a {dim}-dimensional ring",
                all.len(),
                rank(&field, &all)
            )));
        }
        for (a, xs) in &self.components {
            for (b, ys) in &self.components {
                let target = self.group.op(a, b);
                for x in xs {
                    for y in ys {
                        let p = ring.mul(x, y);
                        let parts = self.decompose(ring, &p).expect("basis spans the ring");
                        if parts.keys().any(|d| *d != target) {
                            return Err(AlgebraError::InvalidGrading(format!(
                                "({})·({}) = {} is not of degree {target}",
                                ring.render(x),
                                ring.render(y),
                                ring.render(&p)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn all_vectors(&self) -> Vec<Vector<usize>> {
        self.components.iter().flat_map(|(_, xs)| xs.iter().map(|x| x.as_vector().clone())).collect()
    }

    /// Homogeneous parts of `a`; `None` if the bases do not span `a`.
    pub fn decompose(
        &self,
        ring: &SemigroupRing<'_, FiniteSemigroup>,
        a: &RingElement<usize>,
    ) -> Option<BTreeMap<GroupElement, RingElement<usize>>> {
        let coeffs = solve(&ring.field, &self.all_vectors(), a.as_vector())?;
        let mut coeffs = coeffs.into_iter();
        let mut out = BTreeMap::new();
        for (d, xs) in &self.components {
            let mut part = ring.zero();
            for x in xs {
                part = ring.add(&part, &ring.scale(&coeffs.next().expect("one per vector"), x));
            }
            if !part.is_zero() {
                let slot = out.entry(d.clone()).or_insert_with(|| ring.zero());
                *slot = ring.add(slot, &part);
            }
        }
        out.retain(|_, v: &mut RingElement<usize>| !v.is_zero());
        Some(out)
    }
}

/// The external grading whose components are `A[S_α]`.
pub fn induced_external(gs: &FiniteGraded, field: Field) -> ExternalGrading {
    let ring = SemigroupRing::new(&gs.sg, field);
    ExternalGrading {
        group: gs.group.clone(),
        components: gs
            .components()
            .into_iter()
            .map(|(d, set)| (d, set.into_iter().map(|s| ring.basis(s)).collect()))
            .collect(),
    }
}

/// Whether `S = ⋃_α (S ∩ A[S]_α)`, i.e. every `1·s` is homogeneous. A
/// failure names an element together with its nonzero homogeneous parts.
pub fn grading_restriction_check(ring: &SemigroupRing<'_, FiniteSemigroup>, grading: &ExternalGrading) -> Verdict {
    if let Err(e) = grading.validate(ring) {
        return Verdict::fails(format!("not a grading of A[S]: {e}"), vec![]);
    }
    let sg = ring.sg;
    let mut homogeneous: BTreeMap<GroupElement, Vec<String>> =
        grading.components.iter().map(|(d, _)| (d.clone(), Vec::new())).collect();
    let mut split = None;
    for s in sg.nonzero() {
        let parts = grading.decompose(ring, &ring.basis(s)).expect("validated basis");
        if parts.len() == 1 {
            let d = parts.keys().next().expect("one part").clone();
            homogeneous.entry(d).or_default().push(sg.label(s).to_string());
        } else if split.is_none() {
            split = Some((s, parts));
        }
    }
    let summary = homogeneous
        .iter()
        .map(|(d, xs)| format!("S ∩ A[S]_{d} ∖ 0 = {{{}}}", xs.join(", ")))
        .collect::<Vec<_>>()
        .join("; ");
    match split {
        None => Verdict::holds(format!("every element of S is homogeneous ({summary})")),
        Some((s, parts)) => {
            let mut witness = vec![sg.label(s).to_string()];
            witness.extend(parts.iter().map(|(d, p)| format!("{d}: {}", ring.render(p))));
            Verdict::fails(
                format!("{} is not homogeneous, so the grading does not restrict to S ({summary})", sg.label(s)),
                witness,
            )
        }
    }
}
