// SPDX-License-Identifier: Apache-2.0

//! The groupoid of germs `S⋉X` of an action `θ: S → I(X)`. Germs are pairs
//! `(s, x)` with `x ∈ Dom θ_s`, identified when `se = te` for an idempotent
//! `e` with `x ∈ Dom θ_e`; `[s,x][t,y] = [st,y]` when `x = θ_t(y)`.

use std::collections::BTreeSet;

use grade_group::GroupElement;
use grading::{is_strongly_graded, Bounds, FiniteGraded, Verdict};
use semigroup_core::PartialBijection;
use serde_json::{json, Value};

use crate::ActionError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Germ {
    /// A representative `(s, x)`.
    pub rep: (usize, usize),
    pub source: usize,
    pub range: usize,
    pub degree: GroupElement,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct GermGroupoid {
    pub points: usize,
    pub germs: Vec<Germ>,
    /// `units[x]` is the germ `[e, x]` for any idempotent `e` with `x ∈ Dom θ_e`.
    pub units: Vec<usize>,
    pub inverse: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
    /// The germ relation is reflexive, symmetric and transitive.
    pub equivalence: bool,
    /// `[s,x] ↦ deg(s)` is constant on classes.
    pub grading_well_defined: bool,
    /// Composition, units and inverses satisfy the groupoid axioms.
    pub groupoid_axioms: bool,
    /// `d(𝒢_α) = 𝒢^(0)` for every `α`.
    pub strong: Verdict,
    pub semigroup_strong: bool,
}

impl GermGroupoid {
    /// `gh`, defined when `d(g) = r(h)`.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g][h]
    }

    /// `S` strongly graded implies `S⋉X` strongly graded.
    pub fn transfer_holds(&self) -> bool {
        !self.semigroup_strong || self.strong.is_holds()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "objects": (0..self.points).collect::<Vec<_>>(),
            "morphisms": self.germs.iter().map(|g| json!({
                "germ": g.label,
                "source": g.source,
                "range": g.range,
                "degree": g.degree.to_string(),
            })).collect::<Vec<_>>(),
            "strong": self.strong,
        })
    }
}

pub fn germ_groupoid(gs: &FiniteGraded, theta: &[PartialBijection]) -> Result<GermGroupoid, ActionError> {
    let sg = &gs.sg;
    if !sg.is_inverse() {
        return Err(ActionError::NotInverse);
    }
    let n = sg.order();
    if theta.len() != n {
        return Err(ActionError::InvalidAction(format!("{} maps for {n} elements", theta.len())));
    }
    let points = theta.first().map_or(0, PartialBijection::points);
    if theta.iter().any(|t| t.points() != points) {
        return Err(ActionError::InvalidAction("maps act on different sets".into()));
    }
    let zero = sg.zero_index();
    if !theta[zero].is_empty() {
        return Err(ActionError::InvalidAction("θ_0 must be the empty map".into()));
    }
    for s in 0..n {
        for t in 0..n {
            if theta[s].compose(&theta[t]) != theta[sg.m(s, t)] {
                return Err(ActionError::InvalidAction(format!(
                    "θ_{}θ_{} ≠ θ_{}",
                    sg.label(s),
                    sg.label(t),
                    sg.label(sg.m(s, t))
                )));
            }
        }
    }
    let idempotents: Vec<usize> = sg.idempotents().into_iter().filter(|&e| e != zero).collect();
    let in_dom = |s: usize, x: usize| theta[s].apply(x).is_some();
    for x in 0..points {
        if !idempotents.iter().any(|&e| in_dom(e, x)) {
            return Err(ActionError::DegenerateAction(format!("point {x}")));
        }
    }

    // All pairs (s, x) with x ∈ Dom θ_s, grouped by x.
    let pairs: Vec<(usize, usize)> =
        (0..points).flat_map(|x| (0..n).filter(move |&s| in_dom(s, x)).map(move |s| (s, x))).collect();
    let related = |(s, x): (usize, usize), (t, y): (usize, usize)| {
        x == y && idempotents.iter().any(|&e| in_dom(e, x) && sg.m(s, e) == sg.m(t, e))
    };
    let m = pairs.len();
    let mut equivalence = (0..m).all(|i| related(pairs[i], pairs[i]));
    for i in 0..m {
        for j in 0..m {
            if !related(pairs[i], pairs[j]) {
                continue;
            }
            if !related(pairs[j], pairs[i]) {
                equivalence = false;
            }
            for k in 0..m {
                if related(pairs[j], pairs[k]) && !related(pairs[i], pairs[k]) {
                    equivalence = false;
                }
            }
        }
    }

    // Classes: least related index as the representative.
    let class_rep: Vec<usize> = (0..m).map(|i| (0..m).find(|&j| related(pairs[i], pairs[j])).unwrap_or(i)).collect();
    let reps: Vec<usize> = class_rep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let class_of: Vec<usize> = class_rep.iter().map(|r| reps.binary_search(r).expect("representative")).collect();
    let pair_index = |s: usize, x: usize| pairs.iter().position(|&p| p == (s, x));
    let germ_of = |s: usize, x: usize| pair_index(s, x).map(|i| class_of[i]);

    let mut grading_well_defined = true;
    let mut germs: Vec<Germ> = Vec::with_capacity(reps.len());
    for &r in &reps {
        let (s, x) = pairs[r];
        germs.push(Germ {
            rep: (s, x),
            source: x,
            range: theta[s].apply(x).expect("domain"),
            degree: gs.deg(s).expect("nonzero").clone(),
            label: format!("[{},{x}]", sg.label(s)),
        });
    }
    for i in 0..m {
        let (s, x) = pairs[i];
        let g = &germs[class_of[i]];
        if gs.deg(s) != Some(&g.degree) || theta[s].apply(x) != Some(g.range) {
            grading_well_defined = false;
        }
    }

    // Composition, checked on every pair of representatives.
    let k = germs.len();
    let mut compose = vec![vec![None; k]; k];
    let mut groupoid_axioms = true;
    for i in 0..m {
        for j in 0..m {
            let ((s, x), (t, y)) = (pairs[i], pairs[j]);
            if theta[t].apply(y) != Some(x) {
                continue;
            }
            let c = germ_of(sg.m(s, t), y);
            let slot = &mut compose[class_of[i]][class_of[j]];
            match (c, *slot) {
                (None, _) => groupoid_axioms = false,
                (Some(c), None) => *slot = Some(c),
                (Some(c), Some(d)) if c != d => groupoid_axioms = false,
                _ => {}
            }
        }
    }
    let units: Vec<usize> = (0..points)
        .map(|x| {
            let e = idempotents.iter().copied().find(|&e| in_dom(e, x)).expect("nondegenerate");
            germ_of(e, x).expect("unit germ")
        })
        .collect();
    // Distinct points have distinct units, and all [e,x] at a point coincide.
    groupoid_axioms &= units.iter().collect::<BTreeSet<_>>().len() == points;
    groupoid_axioms &=
        idempotents.iter().all(|&e| (0..points).all(|x| !in_dom(e, x) || germ_of(e, x) == Some(units[x])));
    let inverse: Vec<usize> = germs
        .iter()
        .map(|g| {
            let (s, _) = g.rep;
            germ_of(sg.inv(s).expect("inverse"), g.range).expect("inverse germ")
        })
        .collect();
    for (g, germ) in germs.iter().enumerate() {
        let ok = compose[units[germ.range]][g] == Some(g)
            && compose[g][units[germ.source]] == Some(g)
            && compose[g][inverse[g]] == Some(units[germ.range])
            && compose[inverse[g]][g] == Some(units[germ.source]);
        groupoid_axioms &= ok;
    }
    for a in 0..k {
        for b in 0..k {
            let Some(ab) = compose[a][b] else { continue };
            for c in 0..k {
                if let Some(bc) = compose[b][c] {
                    groupoid_axioms &= compose[ab][c].is_some() && compose[ab][c] == compose[a][bc];
                }
            }
        }
    }

    let strong = strong_verdict(gs, &germs, points);
    let semigroup_strong = is_strongly_graded(gs, Bounds::default()).is_holds();
    Ok(GermGroupoid {
        points,
        germs,
        units,
        inverse,
        compose,
        equivalence,
        grading_well_defined,
        groupoid_axioms,
        strong,
        semigroup_strong,
    })
}

fn strong_verdict(gs: &FiniteGraded, germs: &[Germ], points: usize) -> Verdict {
    let group = &gs.group;
    if !group.is_finite() {
        if points == 0 {
            return Verdict::holds("no objects: vacuous");
        }
        let support: BTreeSet<&GroupElement> = germs.iter().map(|g| &g.degree).collect();
        let outside = (0..).flat_map(|b| group.enumerate(b)).find(|a| !support.contains(a)).expect("finite support");
        return Verdict::fails(format!("𝒢_{outside} is empty"), vec![outside.to_string()]);
    }
    for alpha in group.enumerate(0) {
        let sources: BTreeSet<usize> = germs.iter().filter(|g| g.degree == alpha).map(|g| g.source).collect();
        if let Some(x) = (0..points).find(|x| !sources.contains(x)) {
            return Verdict::fails(format!("d(𝒢_{alpha}) misses a unit"), vec![alpha.to_string(), x.to_string()]);
        }
    }
    Verdict::holds("d(𝒢_α) = 𝒢^(0) for every α")
}
