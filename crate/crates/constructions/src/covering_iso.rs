// SPDX-License-Identifier: Apache-2.0

//! The graded map `𝒮(Ē) → 𝒮(E)#Γ` from the graph inverse semigroup of a
//! covering graph, defined on generators by `v_α ↦ vP_α`,
//! `e_α ↦ eP_{ω(e)⁻¹α}` and `e_α⁻¹ ↦ e⁻¹P_α`.

use std::collections::{BTreeSet, HashMap};

use gis::{gis_enumerate, GisBackend, GisElement, GisGrading, GradedGis};
use grade_group::GroupElement;
use grading::{GradedSemigroup, Verdict};
use graphs::{covering_graph, Covering, Graph, GraphError, Path, WeightMap};
use semigroup_core::Semigroup;
use serde::Serialize;

use crate::smash::{Smash, SmashElement};
use crate::ConstructionError;

pub struct CoveringIso {
    pub covering: Covering,
    /// `𝒮(Ē)` graded by the inherited weights.
    pub domain: GradedGis,
    /// `𝒮(E)#Γ` with the window as its levels.
    pub target: Smash<GradedGis>,
    weights: WeightMap,
}

impl CoveringIso {
    pub fn new(g: &Graph, weights: &WeightMap, window: &[GroupElement]) -> Result<Self, ConstructionError> {
        let covering = covering_graph(g, weights, window).map_err(|e| match e {
            GraphError::EmptyWindow => ConstructionError::WindowTooSmall("the window is empty".into()),
            other => other.into(),
        })?;
        let domain =
            GradedGis::new(GisBackend::new(covering.graph.clone()), GisGrading::Weight(covering.weights.clone()))?;
        let base = GradedGis::new(GisBackend::new(g.clone()), GisGrading::Weight(weights.clone()))?;
        let levels =
            covering.vertex_origin.iter().map(|(_, a)| a.clone()).collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Self { covering, domain, target: Smash::with_levels(base, levels), weights: weights.clone() })
    }

    fn base_graph(&self) -> &Graph {
        self.target.base().backend.graph()
    }

    fn edge_path(&self, e: usize) -> Path {
        let g = self.base_graph();
        g.path(g.edge(e).src, vec![e]).expect("single edge")
    }

    /// The image of an element, as the product of its generator images.
    pub fn image(&self, x: &GisElement) -> SmashElement<GisElement> {
        let GisElement::Pair(p, q) = x else { return SmashElement::Zero };
        let group = &self.weights.group;
        let (v, alpha) = &self.covering.vertex_origin[p.source()];
        let mut acc = SmashElement::Elem(GisElement::vertex(*v), alpha.clone());
        for &ec in p.edges() {
            let (e, alpha) = &self.covering.edge_origin[ec];
            let level = group.op(&group.inv(self.weights.get(*e)), alpha);
            acc = self.target.mul(&acc, &SmashElement::Elem(GisElement::path(self.edge_path(*e)), level));
        }
        for &fc in q.edges().iter().rev() {
            let (f, alpha) = &self.covering.edge_origin[fc];
            acc =
                self.target.mul(&acc, &SmashElement::Elem(GisElement::path_inverse(self.edge_path(*f)), alpha.clone()));
        }
        acc
    }

    /// The preimage of `xy⁻¹P_β`, when every level it passes through is in the window.
    pub fn lift(&self, z: &SmashElement<GisElement>) -> Option<GisElement> {
        let SmashElement::Elem(GisElement::Pair(x, y), beta) = z else { return None };
        let group = &self.weights.group;
        let cov = &self.covering;
        let mut level = beta.clone();
        let mut y_edges = Vec::with_capacity(y.len());
        for &f in y.edges() {
            y_edges.push(cov.edge_at(f, &level)?);
            level = group.op(&group.inv(self.weights.get(f)), &level);
        }
        let y_lift = cov.graph.path(cov.vertex_at(y.source(), beta)?, y_edges).ok()?;
        let mut x_edges = Vec::with_capacity(x.len());
        for &e in x.edges().iter().rev() {
            level = group.op(self.weights.get(e), &level);
            x_edges.push(cov.edge_at(e, &level)?);
        }
        x_edges.reverse();
        let x_lift = cov.graph.path(cov.vertex_at(x.source(), &level)?, x_edges).ok()?;
        GisElement::pair(x_lift, y_lift).ok()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveringIsoReport {
    pub verdict: Verdict,
    pub window: Vec<String>,
    pub size_bound: usize,
    pub domain_size: usize,
    pub graded: bool,
    pub homomorphism: bool,
    pub injective: bool,
    /// Every element of the window-consistent smash fragment has a preimage.
    pub surjective: bool,
    /// Smash elements whose lift stays inside the window.
    pub lifted: usize,
    /// Smash elements whose lift would leave the window.
    pub outside_window: usize,
}

/// Checks the covering map on all elements of `𝒮(Ē)` of size at most `size_bound`.
pub fn covering_iso(
    g: &Graph,
    weights: &WeightMap,
    window: &[GroupElement],
    size_bound: usize,
) -> Result<CoveringIsoReport, ConstructionError> {
    let iso = CoveringIso::new(g, weights, window)?;
    let domain = gis_enumerate(&iso.domain.backend, size_bound);
    let images: HashMap<&GisElement, SmashElement<GisElement>> = domain.iter().map(|x| (x, iso.image(x))).collect();
    let mut witness = Vec::new();

    let graded = domain.iter().all(|x| {
        let ok = iso.domain.degree(x) == iso.target.degree(&images[x])
            && (x == &GisElement::Zero) == (images[x] == SmashElement::Zero);
        if !ok && witness.is_empty() {
            witness.push(iso.domain.render(x));
        }
        ok
    });

    let mut homomorphism = true;
    'outer: for x in &domain {
        for y in &domain {
            let xy = iso.domain.mul(x, y);
            let lhs = images.get(&xy).cloned().unwrap_or_else(|| iso.image(&xy));
            if lhs != iso.target.mul(&images[x], &images[y]) {
                homomorphism = false;
                witness = vec![iso.domain.render(x), iso.domain.render(y)];
                break 'outer;
            }
        }
    }

    let injective = images.values().collect::<BTreeSet<_>>().len() == domain.len();

    let domain_set: BTreeSet<&GisElement> = domain.iter().collect();
    let (mut lifted, mut outside_window, mut surjective) = (0, 0, true);
    for z in iso.target.enumerate(size_bound) {
        // Acyclic bases enumerate completely; keep the fragment at the domain's size bound.
        let SmashElement::Elem(s, _) = &z else { continue };
        if s.size() > size_bound {
            continue;
        }
        match iso.lift(&z) {
            Some(pre) if domain_set.contains(&pre) && images[&pre] == z => lifted += 1,
            Some(_) => {
                surjective = false;
                if witness.is_empty() {
                    witness.push(iso.target.render(&z));
                }
            }
            None => outside_window += 1,
        }
    }

    let window_text: Vec<String> = window.iter().map(ToString::to_string).collect();
    let verdict = if graded && homomorphism && injective && surjective {
        let v = Verdict::holds(format!(
            "graded injective homomorphism onto the window-consistent fragment, window {{{}}}",
            window_text.join(", ")
        ))
        .with_bound("size_bound", size_bound);
        let whole_group = iso.weights.group.order().is_some_and(|n| iso.target.levels().len() == n);
        if whole_group && !g.has_cycles() {
            v
        } else {
            v.fragment()
        }
    } else {
        let what =
            [(graded, "graded"), (homomorphism, "homomorphism"), (injective, "injective"), (surjective, "surjective")]
                .iter()
                .filter(|(ok, _)| !ok)
                .map(|(_, w)| *w)
                .collect::<Vec<_>>()
                .join(", ");
        Verdict::fails(format!("covering map fails: {what}"), witness)
    };
    Ok(CoveringIsoReport {
        verdict,
        window: window_text,
        size_bound,
        domain_size: domain.len(),
        graded,
        homomorphism,
        injective,
        surjective,
        lifted,
        outside_window,
    })
}
