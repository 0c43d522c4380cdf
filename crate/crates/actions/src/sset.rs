// SPDX-License-Identifier: Apache-2.0

//! Pointed and graded left S-sets over a finite semigroup.

use grade_group::{GradeGroup, GroupElement};
use grading::{FiniteGraded, Verdict};
use semigroup_core::FiniteSemigroup;
use serde_json::{json, Value};

use crate::ActionError;

/// A finite pointed left S-set; `action[s][x]` is `s·x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedSSet {
    pub points: Vec<String>,
    pub zero: usize,
    pub action: Vec<Vec<usize>>,
}

impl PointedSSet {
    pub fn new(points: Vec<String>, zero: usize, action: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        let n = points.len();
        if zero >= n {
            return Err(ActionError::InvalidAction("zero point out of range".into()));
        }
        if action.iter().any(|row| row.len() != n || row.iter().any(|&y| y >= n)) {
            return Err(ActionError::InvalidAction(format!("action rows must map {n} points into themselves")));
        }
        Ok(Self { points, zero, action })
    }

    /// `{0_X}` with the only possible action.
    pub fn trivial(semigroup_order: usize) -> Self {
        Self { points: vec!["0".into()], zero: 0, action: vec![vec![0]; semigroup_order] }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn act(&self, s: usize, x: usize) -> usize {
        self.action[s][x]
    }

    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&x| x != self.zero)
    }

    /// A point outside `SX`, if any.
    pub fn non_unital_point(&self) -> Option<usize> {
        let mut hit = vec![false; self.len()];
        for row in &self.action {
            for &y in row {
                hit[y] = true;
            }
        }
        (0..self.len()).find(|&x| !hit[x])
    }

    /// `{"points": [...], "zero": i, "action": [[...]]}`, one action row per
    /// element of `S`.
    pub fn from_json(v: &Value) -> Result<Self, ActionError> {
        let bad = |m: &str| ActionError::InvalidAction(m.to_string());
        let action: Vec<Vec<usize>> =
            serde_json::from_value(v.get("action").cloned().ok_or_else(|| bad("missing \"action\""))?)
                .map_err(|e| bad(&e.to_string()))?;
        let n = action.first().map_or(1, Vec::len);
        let points = match v.get("points") {
            Some(p) => serde_json::from_value(p.clone()).map_err(|e| bad(&e.to_string()))?,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let zero = v.get("zero").and_then(Value::as_u64).unwrap_or(0) as usize;
        Self::new(points, zero, action)
    }

    pub fn to_json(&self) -> Value {
        json!({ "points": self.points, "zero": self.zero, "action": self.action })
    }
}

fn action_violation(s: &FiniteSemigroup, x: &PointedSSet) -> Option<(String, Vec<String>)> {
    if x.action.len() != s.order() {
        return Some(("one action row per semigroup element".into(), vec![]));
    }
    let z = s.zero_index();
    for p in 0..x.len() {
        if x.act(z, p) != x.zero {
            return Some(("0·x ≠ 0_X".into(), vec![x.points[p].clone()]));
        }
    }
    for a in 0..s.order() {
        if x.act(a, x.zero) != x.zero {
            return Some(("s·0_X ≠ 0_X".into(), vec![s.label(a).into()]));
        }
    }
    for a in 0..s.order() {
        for b in 0..s.order() {
            let ab = s.m(a, b);
            for p in 0..x.len() {
                if x.act(a, x.act(b, p)) != x.act(ab, p) {
                    return Some((
                        "s(tx) ≠ (st)x".into(),
                        vec![s.label(a).into(), s.label(b).into(), x.points[p].clone()],
                    ));
                }
            }
        }
    }
    None
}

/// Associativity, pointedness and unitality, checked exhaustively.
pub fn sset_validate(s: &FiniteSemigroup, x: &PointedSSet) -> Verdict {
    if let Some((cert, witness)) = action_violation(s, x) {
        return Verdict::fails(cert, witness);
    }
    if let Some(p) = x.non_unital_point() {
        return Verdict::fails("SX ≠ X", vec![x.points[p].clone()]);
    }
    Verdict::holds("pointed unital left S-set")
}

/// Whether `x` is a pointed S-set, without requiring unitality.
pub fn is_action(s: &FiniteSemigroup, x: &PointedSSet) -> bool {
    action_violation(s, x).is_none()
}

/// A pointed S-set with degrees on its nonzero points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSSet {
    pub set: PointedSSet,
    pub degrees: Vec<Option<GroupElement>>,
}

impl GradedSSet {
    pub fn deg(&self, x: usize) -> Option<&GroupElement> {
        self.degrees[x].as_ref()
    }

    /// Nonzero points of `X_α`.
    pub fn component(&self, alpha: &GroupElement) -> Vec<usize> {
        (0..self.set.len()).filter(|&x| self.deg(x) == Some(alpha)).collect()
    }

    /// Whether `x ∈ X_α` (the zero point lies in every component).
    pub fn in_component(&self, x: usize, alpha: &GroupElement) -> bool {
        x == self.set.zero || self.deg(x) == Some(alpha)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.set.to_json();
        v["degrees"] = json!(self.degrees.iter().map(|d| d.as_ref().map(ToString::to_string)).collect::<Vec<_>>());
        v
    }
}

/// The S-set axioms plus `deg(sx) = deg(s)deg(x)` whenever `sx ≠ 0_X`.
pub fn graded_validate(gs: &FiniteGraded, x: &GradedSSet) -> Verdict {
    let base = sset_validate(&gs.sg, &x.set);
    if !base.is_holds() {
        return base;
    }
    if x.degrees.len() != x.set.len() {
        return Verdict::fails("one degree slot per point", vec![]);
    }
    for p in 0..x.set.len() {
        if (p == x.set.zero) != x.deg(p).is_none() {
            return Verdict::fails("exactly the nonzero points carry degrees", vec![x.set.points[p].clone()]);
        }
    }
    let g = &gs.group;
    for s in gs.sg.nonzero() {
        for p in x.set.nonzero() {
            let q = x.set.act(s, p);
            if q == x.set.zero {
                continue;
            }
            let want = g.op(gs.deg(s).expect("nonzero"), x.deg(p).expect("nonzero"));
            if x.deg(q) != Some(&want) {
                return Verdict::fails("deg(sx) ≠ deg(s)deg(x)", vec![gs.sg.label(s).into(), x.set.points[p].clone()]);
            }
        }
    }
    Verdict::holds("graded unital left S-set")
}

/// `X(α)`: same action, `X(α)_β = X_{βα}`, so a point of degree `γ` moves to `γα⁻¹`.
pub fn graded_shift(x: &GradedSSet, group: &GradeGroup, alpha: &GroupElement) -> GradedSSet {
    let inv = group.inv(alpha);
    GradedSSet {
        set: x.set.clone(),
        degrees: x.degrees.iter().map(|d| d.as_ref().map(|d| group.op(d, &inv))).collect(),
    }
}

/// `S` acting on itself by left multiplication, graded by `S`.
pub fn left_regular(gs: &FiniteGraded) -> GradedSSet {
    let sg = &gs.sg;
    let n = sg.order();
    let action = (0..n).map(|s| (0..n).map(|x| sg.m(s, x)).collect()).collect();
    let set = PointedSSet { points: sg.labels().to_vec(), zero: sg.zero_index(), action };
    GradedSSet { set, degrees: gs.degrees().to_vec() }
}
