// SPDX-License-Identifier: Apache-2.0

//! The functors between graded S-sets and `S#Γ`-sets. A graded `X` becomes
//! an `S#Γ`-set through `(sP_α)x = sx` for `x ∈ X_α` (and `0` otherwise);
//! an `S#Γ`-set is graded back by `X_α = {y : (uP_α)y = y for some u ∈ E(S)}`.

use std::collections::HashMap;

use constructions::{Smash, SmashElement};
use grade_group::GroupElement;
use grading::FiniteGraded;
use semigroup_core::local_units_report;
use serde::Serialize;

use crate::sset::{graded_shift, graded_validate, is_action, GradedSSet, PointedSSet};
use crate::ActionError;

#[derive(Debug, Clone, Serialize)]
pub struct Roundtrip {
    #[serde(skip)]
    pub x_sharp: PointedSSet,
    #[serde(skip)]
    pub x_back: GradedSSet,
    /// `X_#` is a pointed unital `S#Γ`-set.
    pub sharp_valid: bool,
    /// Grading back recovers `X` exactly.
    pub equal: bool,
    /// `(X_#)(α) = X(α)_#` for every `α`.
    pub shift_square: bool,
    pub shifts_checked: usize,
}

impl Roundtrip {
    pub fn ok(&self) -> bool {
        self.sharp_valid && self.equal && self.shift_square
    }
}

/// `S#Γ` tabulated, with a lookup from `(s, α)` to the table index.
struct SmashTable {
    table: FiniteGraded,
    elems: Vec<SmashElement<usize>>,
    index: HashMap<(usize, GroupElement), usize>,
}

impl SmashTable {
    fn new(gs: &FiniteGraded) -> Result<Self, ActionError> {
        let (table, elems) = FiniteGraded::materialize(&Smash::new(gs, 0), 0)?;
        let index = elems
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match e {
                SmashElement::Elem(s, a) => Some(((*s, a.clone()), i)),
                SmashElement::Zero => None,
            })
            .collect();
        Ok(Self { table, elems, index })
    }

    fn sharp(&self, x: &GradedSSet) -> PointedSSet {
        let action = self
            .elems
            .iter()
            .map(|e| {
                (0..x.set.len())
                    .map(|p| match e {
                        SmashElement::Elem(s, a) if x.deg(p) == Some(a) => x.set.act(*s, p),
                        _ => x.set.zero,
                    })
                    .collect()
            })
            .collect();
        PointedSSet { points: x.set.points.clone(), zero: x.set.zero, action }
    }
}

pub fn smash_functor_roundtrip(gs: &FiniteGraded, x: &GradedSSet) -> Result<Roundtrip, ActionError> {
    let group = &gs.group;
    if !group.is_finite() {
        return Err(ActionError::InfiniteGroup);
    }
    if !local_units_report(&gs.sg, 0).has_local_units {
        return Err(ActionError::NoLocalUnits);
    }
    if let Some(p) = x.set.non_unital_point() {
        return Err(ActionError::NotUnital(x.set.points[p].clone()));
    }
    let valid = graded_validate(gs, x);
    if valid.is_fails() {
        return Err(ActionError::InvalidAction(format!("{}: {}", valid.certificate, valid.witness.join(", "))));
    }
    let sm = SmashTable::new(gs)?;
    let x_sharp = sm.sharp(x);
    let sharp_valid = is_action(&sm.table.sg, &x_sharp) && x_sharp.non_unital_point().is_none();

    let x_back = grade_back(gs, &sm, &x_sharp);
    let equal = x_back.as_ref().is_some_and(|b| b.set.action == x.set.action && b.degrees == x.degrees);

    let levels = group.enumerate(0);
    let shift_square = levels.iter().all(|alpha| {
        // (X_#)(α): the S#Γ-set X_# twisted by τ_α.
        let twisted: Vec<Vec<usize>> = sm
            .elems
            .iter()
            .map(|e| match e {
                SmashElement::Elem(s, beta) => x_sharp.action[sm.index[&(*s, group.op(beta, alpha))]].clone(),
                SmashElement::Zero => x_sharp.action[sm.table.sg.zero_index()].clone(),
            })
            .collect();
        twisted == sm.sharp(&graded_shift(x, group, alpha)).action
    });
    Ok(Roundtrip {
        x_back: x_back.unwrap_or_else(|| x.clone()),
        x_sharp,
        sharp_valid,
        equal,
        shift_square,
        shifts_checked: levels.len(),
    })
}

/// The inverse functor; `None` when some point lies in no `X_α` or in two.
fn grade_back(gs: &FiniteGraded, sm: &SmashTable, y: &PointedSSet) -> Option<GradedSSet> {
    let idempotents: Vec<usize> = gs.sg.idempotents().into_iter().filter(|&u| u != gs.sg.zero_index()).collect();
    let levels = gs.group.enumerate(0);
    let mut degrees = vec![None; y.len()];
    for p in y.nonzero() {
        let mut found =
            levels.iter().filter(|a| idempotents.iter().any(|&u| y.act(sm.index[&(u, (*a).clone())], p) == p));
        degrees[p] = Some(found.next()?.clone());
        if found.next().is_some() {
            return None;
        }
    }
    let zero = gs.sg.zero_index();
    let action = (0..gs.sg.order())
        .map(|s| {
            (0..y.len())
                .map(|p| match &degrees[p] {
                    Some(a) if s != zero => y.act(sm.index[&(s, a.clone())], p),
                    _ => y.zero,
                })
                .collect()
        })
        .collect();
    Some(GradedSSet { set: PointedSSet { points: y.points.clone(), zero: y.zero, action }, degrees })
}
