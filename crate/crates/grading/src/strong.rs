// SPDX-License-Identifier: Apache-2.0

//! Strongly, locally strongly and saturated strongly graded semigroups.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use grade_group::GroupElement;
use semigroup_core::green_classes;
use serde::Serialize;

use crate::{FiniteGraded, GradedSemigroup, GradingError, Verdict};

/// Enumeration bounds for verdicts on infinite backends or groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Size bound for the elements being tested.
    pub element_bound: usize,
    /// Size bound for witnesses searched for.
    pub witness_bound: usize,
    /// Bound passed to the group enumeration (ignored for finite groups).
    pub group_bound: usize,
    /// Maximal length of descending idempotent chains.
    pub chain_bound: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { element_bound: 4, witness_bound: 6, group_bound: 3, chain_bound: 3 }
    }
}

impl Bounds {
    fn stamp(&self, v: Verdict) -> Verdict {
        v.with_bound("element_bound", self.element_bound)
            .with_bound("witness_bound", self.witness_bound)
            .with_bound("group_bound", self.group_bound)
    }
}

/// Nonzero enumerated elements grouped by degree.
fn by_degree<G: GradedSemigroup>(gs: &G, bound: usize) -> BTreeMap<GroupElement, Vec<G::Elem>> {
    let mut out: BTreeMap<GroupElement, Vec<G::Elem>> = BTreeMap::new();
    for a in gs.enumerate(bound) {
        if gs.is_zero(&a) {
            continue;
        }
        if let Some(d) = gs.degree(&a) {
            out.entry(d).or_default().push(a);
        }
    }
    out
}

/// A group element outside the (finite) support of a finite backend.
fn outside_support<G: GradedSemigroup>(gs: &G, support: &BTreeSet<GroupElement>) -> Option<GroupElement> {
    let group = gs.group();
    if group.is_finite() {
        return group.enumerate(0).into_iter().find(|g| !support.contains(g));
    }
    (0..).map(|b| group.enumerate(b)).find_map(|gs| gs.into_iter().find(|g| !support.contains(g)))
}

/// Direct check of `S_{αβ} ⊆ S_α S_β` over the group fragment.
///
/// Exact for finite backends (the group may be infinite: then a degree
/// outside the support gives a witness). For infinite backends the result is
/// `Holds` on the fragment or `Unknown`, never `Fails`.
pub fn product_coverage<G: GradedSemigroup>(gs: &G, bounds: Bounds) -> Verdict {
    let group = gs.group();
    let finite = gs.is_finite();
    let witnesses = by_degree(gs, if finite { 0 } else { bounds.witness_bound });
    if finite && !group.is_finite() {
        let support: BTreeSet<GroupElement> = witnesses.keys().cloned().collect();
        let Some((beta, elems)) = witnesses.iter().next() else {
            return Verdict::holds("zero semigroup: vacuous");
        };
        let alpha = outside_support(gs, &support).expect("finite support in an infinite group");
        let other = group.op(&group.inv(&alpha), beta);
        return Verdict::fails(
            format!("S_{alpha} = {{0}}, so S_{alpha}·S_{other} = {{0}} misses an element of S_{beta}"),
            vec![alpha.to_string(), other.to_string(), gs.render(&elems[0])],
        );
    }
    let targets = if finite { witnesses.clone() } else { by_degree(gs, bounds.element_bound) };
    let fragment = group.enumerate(bounds.group_bound);
    let empty = Vec::new();
    for alpha in &fragment {
        for beta in &fragment {
            let ab = group.op(alpha, beta);
            let Some(wanted) = targets.get(&ab) else { continue };
            let left = witnesses.get(alpha).unwrap_or(&empty);
            let right = witnesses.get(beta).unwrap_or(&empty);
            let mut products = HashSet::new();
            for s in left {
                for t in right {
                    products.insert(gs.mul(s, t));
                }
            }
            if let Some(missing) = wanted.iter().find(|t| !products.contains(*t)) {
                let witness = vec![alpha.to_string(), beta.to_string(), gs.render(missing)];
                return if finite {
                    Verdict::fails(format!("S_{alpha}·S_{beta} ≠ S_{ab}"), witness)
                } else {
                    bounds.stamp(
                        Verdict::unknown(format!("no factorization found in S_{alpha}·S_{beta}")).with_witness(witness),
                    )
                };
            }
        }
    }
    if finite {
        Verdict::holds("S_α·S_β = S_αβ for all α, β")
    } else {
        bounds.stamp(Verdict::holds("every enumerated element of S_αβ factors through S_α·S_β").fragment())
    }
}

/// Strongly graded verdict. Finite backends are decided exactly by
/// [`product_coverage`]; infinite ones through the local-unit criterion
/// (every local unit lies in `S_α·S_α⁻¹`).
pub fn is_strongly_graded<G: GradedSemigroup>(gs: &G, bounds: Bounds) -> Verdict {
    if gs.is_finite() {
        return product_coverage(gs, bounds);
    }
    let group = gs.group();
    let witnesses = by_degree(gs, bounds.witness_bound);
    let units: Vec<G::Elem> =
        gs.enumerate(bounds.element_bound).into_iter().filter(|u| !gs.is_zero(u) && gs.is_idempotent(u)).collect();
    let empty = Vec::new();
    for alpha in group.enumerate(bounds.group_bound) {
        let here = witnesses.get(&alpha).unwrap_or(&empty);
        let there = witnesses.get(&group.inv(&alpha)).unwrap_or(&empty);
        let reached: HashSet<G::Elem> = match here.first().and_then(|s| gs.inverse(s)) {
            Some(_) => here.iter().filter_map(|s| gs.inverse(s).map(|si| gs.mul(s, &si))).collect(),
            None => here.iter().flat_map(|s| there.iter().map(move |t| gs.mul(s, t))).collect(),
        };
        if let Some(u) = units.iter().find(|u| !reached.contains(*u)) {
            return bounds.stamp(
                Verdict::unknown(format!("local unit not found in S_α·S_α⁻¹ for α = {alpha}"))
                    .with_witness(vec![alpha.to_string(), gs.render(u)]),
            );
        }
    }
    bounds.stamp(Verdict::holds("every enumerated local unit lies in S_α·S_α⁻¹").fragment())
}

/// The equivalent forms of strong grading for a finite graded semigroup with
/// local units over a finite group. Conditions 4 to 7 need an inverse semigroup.
pub fn strong_equivalents(gs: &FiniteGraded) -> Result<BTreeMap<String, bool>, GradingError> {
    if !gs.group.is_finite() {
        return Err(GradingError::InfiniteGroup);
    }
    let s = &gs.sg;
    let group = &gs.group;
    let zero = s.zero_index();
    let comp = |alpha: &GroupElement| -> Vec<usize> {
        let mut c = gs.component(alpha);
        c.push(zero);
        c
    };
    let products = |x: &[usize], y: &[usize]| -> BTreeSet<usize> {
        x.iter().flat_map(|&a| y.iter().map(move |&b| s.m(a, b))).collect()
    };
    let gamma = group.enumerate(0);
    let eps = group.identity();
    let s_eps: BTreeSet<usize> = comp(&eps).into_iter().collect();
    let idempotents = s.idempotents();
    let mut out = BTreeMap::new();
    out.insert("1: S_a S_b = S_ab".to_string(), product_coverage(gs, Bounds::default()).is_holds());
    out.insert(
        "2: S_a S_a^-1 = S_e".to_string(),
        gamma.iter().all(|a| products(&comp(a), &comp(&group.inv(a))) == s_eps),
    );
    out.insert(
        "3: local units in S_a S_a^-1".to_string(),
        gamma.iter().all(|a| {
            let p = products(&comp(a), &comp(&group.inv(a)));
            idempotents.iter().all(|u| p.contains(u))
        }),
    );
    if s.is_inverse() {
        let inv = |a: usize| s.inv(a).expect("inverse");
        let all_e: BTreeSet<usize> = idempotents.iter().copied().collect();
        out.insert(
            "4: E = {ss^-1 : s in S_a}".to_string(),
            gamma.iter().all(|a| comp(a).iter().map(|&x| s.m(x, inv(x))).collect::<BTreeSet<_>>() == all_e),
        );
        out.insert(
            "5: E = {s^-1 s : s in S_a}".to_string(),
            gamma.iter().all(|a| comp(a).iter().map(|&x| s.m(inv(x), x)).collect::<BTreeSet<_>>() == all_e),
        );
        let green = green_classes(s);
        let class_id = |p: &Vec<Vec<usize>>| {
            let mut id = vec![0usize; s.order()];
            for (i, c) in p.iter().enumerate() {
                for &x in c {
                    id[x] = i;
                }
            }
            id
        };
        let (lid, rid) = (class_id(&green.l), class_id(&green.r));
        out.insert(
            "6: every idempotent L-related to some s in S_a".to_string(),
            gamma.iter().all(|a| idempotents.iter().all(|&u| comp(a).iter().any(|&x| lid[x] == lid[u]))),
        );
        out.insert(
            "7: every idempotent R-related to some s in S_a".to_string(),
            gamma.iter().all(|a| idempotents.iter().all(|&u| comp(a).iter().any(|&x| rid[x] == rid[u]))),
        );
    }
    Ok(out)
}

fn require_inverse<G: GradedSemigroup>(gs: &G, bound: usize) -> Result<(), GradingError> {
    match gs.enumerate(bound).into_iter().find(|a| !gs.is_zero(a)) {
        Some(a) if gs.inverse(&a).is_none() => Err(GradingError::NotInverse),
        _ => Ok(()),
    }
}

/// `E(S)_α = {ss⁻¹ : s ∈ S_α}` over the witnesses, nonzero part.
fn idempotent_components<G: GradedSemigroup>(gs: &G, bound: usize) -> BTreeMap<GroupElement, BTreeSet<G::Elem>> {
    by_degree(gs, bound)
        .into_iter()
        .map(|(d, elems)| {
            let es = elems
                .iter()
                .filter_map(|s| gs.inverse(s).map(|si| gs.mul(s, &si)))
                .filter(|v| !gs.is_zero(v))
                .collect();
            (d, es)
        })
        .collect()
}

/// Locally strongly graded verdict via the idempotent criterion: for every
/// nonzero idempotent `u` and every `α` there is a nonzero `v ∈ E(S)_α`, `v ≤ u`.
pub fn is_locally_strongly_graded<G: GradedSemigroup>(gs: &G, bounds: Bounds) -> Result<Verdict, GradingError> {
    require_inverse(gs, bounds.element_bound)?;
    let group = gs.group();
    let finite = gs.is_finite();
    let idem_by_degree = idempotent_components(gs, if finite { 0 } else { bounds.witness_bound });
    let units: Vec<G::Elem> =
        gs.enumerate(bounds.element_bound).into_iter().filter(|u| !gs.is_zero(u) && gs.is_idempotent(u)).collect();
    if units.is_empty() {
        return Ok(Verdict::holds("no nonzero idempotents: vacuous"));
    }
    if finite && !group.is_finite() {
        let support: BTreeSet<GroupElement> = by_degree(gs, 0).keys().cloned().collect();
        let alpha = outside_support(gs, &support).expect("finite support");
        return Ok(Verdict::fails(
            format!("E(S)_{alpha} = {{0}} lies below no nonzero idempotent"),
            vec![gs.render(&units[0]), alpha.to_string()],
        ));
    }
    let empty = BTreeSet::new();
    for alpha in group.enumerate(bounds.group_bound) {
        let candidates = idem_by_degree.get(&alpha).unwrap_or(&empty);
        for u in &units {
            if !candidates.iter().any(|v| gs.mul(u, v) == *v) {
                let witness = vec![gs.render(u), alpha.to_string()];
                return Ok(if finite {
                    Verdict::fails(format!("no nonzero v ∈ E(S)_{alpha} below u"), witness)
                } else {
                    bounds.stamp(Verdict::unknown(format!("no v ∈ E(S)_{alpha} below u found")).with_witness(witness))
                });
            }
        }
    }
    Ok(if finite {
        Verdict::holds("every nonzero idempotent dominates a nonzero element of each E(S)_α")
    } else {
        bounds.stamp(Verdict::holds("idempotent criterion holds on the fragment").fragment())
    })
}

/// Saturated strongly graded verdict. Finite semigroups have no infinite
/// descending chains, so they satisfy it vacuously. For infinite backends the
/// descending chains of enumerated idempotents from fragment-maximal ones, of
/// length at most `chain_bound`, are checked; a chain that is not yet
/// interleaved gives `Unknown`, never `Fails`.
pub fn is_saturated_strongly_graded<G: GradedSemigroup>(gs: &G, bounds: Bounds) -> Result<Verdict, GradingError> {
    require_inverse(gs, bounds.element_bound)?;
    if gs.is_finite() {
        return Ok(Verdict::holds("finite: no infinite descending idempotent chains"));
    }
    let group = gs.group();
    let idem: Vec<G::Elem> =
        gs.enumerate(bounds.element_bound).into_iter().filter(|u| !gs.is_zero(u) && gs.is_idempotent(u)).collect();
    let below = |a: &G::Elem, b: &G::Elem| a != b && gs.mul(a, b) == *a;
    let maximal: Vec<&G::Elem> = idem.iter().filter(|u| !idem.iter().any(|w| below(u, w))).collect();
    let idem_by_degree = idempotent_components(gs, bounds.witness_bound);
    let empty = BTreeSet::new();
    let alphas = group.enumerate(bounds.group_bound);
    let mut chains_checked = 0usize;
    // Depth-first over strictly descending chains.
    let mut stack: Vec<Vec<&G::Elem>> = maximal.iter().map(|u| vec![*u]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        let next: Vec<&G::Elem> = idem.iter().filter(|w| below(w, last)).collect();
        if chain.len() <= bounds.chain_bound && !next.is_empty() {
            for w in next {
                let mut c = chain.clone();
                c.push(w);
                stack.push(c);
            }
            continue;
        }
        if chain.len() == 1 {
            continue;
        }
        chains_checked += 1;
        let top = chain[0];
        for alpha in &alphas {
            let candidates = idem_by_degree.get(alpha).unwrap_or(&empty);
            let ok =
                chain[1..].iter().any(|un| candidates.iter().any(|v| gs.mul(top, v) == *v && gs.mul(v, un) == **un));
            if !ok {
                let mut witness: Vec<String> = chain.iter().map(|u| gs.render(u)).collect();
                witness.push(alpha.to_string());
                return Ok(bounds.stamp(
                    Verdict::unknown(format!("chain not interleaved by E(S)_{alpha} within bounds"))
                        .with_witness(witness)
                        .with_bound("chain_bound", bounds.chain_bound),
                ));
            }
        }
    }
    Ok(bounds.stamp(
        Verdict::holds(format!("{chains_checked} bounded chains interleaved for every α"))
            .fragment()
            .with_bound("chain_bound", bounds.chain_bound),
    ))
}
