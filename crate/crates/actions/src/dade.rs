// SPDX-License-Identifier: Apache-2.0

//! Dade's criterion on a finite family: a graded inverse semigroup is
//! strongly graded exactly when every `ν_X: S ⊗_{S_ε} X_ε → X` is bijective.

use std::collections::BTreeSet;

use grading::{is_strongly_graded, Bounds, FiniteGraded, Verdict};
use serde::Serialize;

use crate::family::graded_unital_family;
use crate::sset::{graded_shift, left_regular, GradedSSet};
use crate::tensor::nu_check;
use crate::ActionError;

#[derive(Debug, Clone, Serialize)]
pub struct DadeReport {
    /// Holds iff every `ν_X` in the family is bijective.
    pub verdict: Verdict,
    pub family_bound: usize,
    /// Generated graded unital S-sets, up to isomorphism.
    pub generated: usize,
    /// Shifts `S(α)` of the left regular S-set.
    pub shifts: usize,
    /// JSON of each `X` whose `ν_X` is not bijective.
    pub failures: Vec<String>,
    pub strongly_graded: bool,
    pub agrees_with_strong: bool,
    /// `S_α X_β = X_{αβ}` for every member and every `α, β`.
    pub products_fill_components: bool,
    pub lemma_agrees: bool,
}

/// Whether `S_α X_β = X_{αβ}` for all `α, β`.
pub fn products_fill_components(gs: &FiniteGraded, x: &GradedSSet) -> bool {
    let group = &gs.group;
    let elems = group.enumerate(0);
    elems.iter().all(|a| {
        let s_a = gs.component(a);
        elems.iter().all(|b| {
            let hit: BTreeSet<usize> = s_a
                .iter()
                .flat_map(|&s| x.component(b).into_iter().map(move |p| x.set.act(s, p)))
                .filter(|&q| q != x.set.zero)
                .collect();
            hit == x.component(&group.op(a, b)).into_iter().collect()
        })
    })
}

pub fn dade_check(gs: &FiniteGraded, family_bound: usize) -> Result<DadeReport, ActionError> {
    if !gs.sg.is_inverse() {
        return Err(ActionError::NotInverse);
    }
    let generated = graded_unital_family(gs, family_bound)?;
    let regular = left_regular(gs);
    let shifts: Vec<GradedSSet> = gs.group.enumerate(0).iter().map(|a| graded_shift(&regular, &gs.group, a)).collect();
    let family: Vec<&GradedSSet> = generated.iter().chain(&shifts).collect();

    let failures: Vec<String> =
        family.iter().filter(|x| !nu_check(gs, x).bijective()).map(|x| x.to_json().to_string()).collect();
    let fills = family.iter().all(|x| products_fill_components(gs, x));
    let strong = is_strongly_graded(gs, Bounds::default()).is_holds();

    let certificate = format!(
        "ν_X over {} graded unital S-sets with at most {family_bound} points and {} shifts S(α)",
        generated.len(),
        shifts.len()
    );
    let verdict = match failures.first() {
        None => Verdict::holds(format!("every {certificate} is bijective")),
        Some(x) => Verdict::fails(format!("{certificate}: {} not bijective", failures.len()), vec![x.clone()]),
    }
    .with_bound("family_bound", family_bound);
    Ok(DadeReport {
        agrees_with_strong: verdict.is_holds() == strong,
        verdict,
        family_bound,
        generated: generated.len(),
        shifts: shifts.len(),
        failures,
        strongly_graded: strong,
        products_fill_components: fills,
        lemma_agrees: fills == strong,
    })
}
