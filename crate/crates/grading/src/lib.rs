// SPDX-License-Identifier: Apache-2.0

//! Gradings of semigroups by groups.
//!
//! A grading assigns a degree to every nonzero element so that
//! `deg(st) = deg(s)·deg(t)` whenever `st ≠ 0`. The component `S_α` is the set
//! of elements of degree `α` together with zero.

use std::collections::{BTreeMap, BTreeSet};

use grade_group::{GradeGroup, GroupElement};
use semigroup_core::{materialize, FiniteSemigroup, Semigroup, SemigroupError};
use serde_json::Value;

pub mod check;
pub mod fixtures;
pub mod green;
pub mod strong;
pub mod transfer;
pub mod verdict;
pub mod veronese;

pub use check::{check_graded_hom, check_grading, components_and_support, Components};
pub use green::{graded_green, GradedGreen};
pub use strong::{
    is_locally_strongly_graded, is_saturated_strongly_graded, is_strongly_graded, product_coverage, strong_equivalents,
    Bounds,
};
pub use transfer::{epsilon_transfer_report, is_zero_e_unitary, EpsilonReport};
pub use verdict::{Status, Verdict};
pub use veronese::{veronese, Veronese};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("operation requires an inverse semigroup")]
    NotInverse,
    #[error("operation requires a finite backend")]
    InfiniteBackend,
    #[error("operation requires a finite grading group")]
    InfiniteGroup,
    #[error("Veronese construction needs a torsion-free abelian group")]
    GroupNotTorsionFreeAbelian,
    #[error("Veronese index must be nonzero")]
    ZeroVeroneseIndex,
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// A semigroup together with a degree map into a group.
pub trait GradedSemigroup: Semigroup {
    fn group(&self) -> &GradeGroup;

    /// Degree of a nonzero element; `None` on zero.
    fn degree(&self, a: &Self::Elem) -> Option<GroupElement>;
}

impl<G: GradedSemigroup + ?Sized> GradedSemigroup for &G {
    fn group(&self) -> &GradeGroup {
        (**self).group()
    }
    fn degree(&self, a: &Self::Elem) -> Option<GroupElement> {
        (**self).degree(a)
    }
}

/// A Cayley table with an explicit degree table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraded {
    pub sg: FiniteSemigroup,
    pub group: GradeGroup,
    degrees: Vec<Option<GroupElement>>,
}

impl FiniteGraded {
    /// No validation beyond shape and membership; use [`check_grading`].
    pub fn new(
        sg: FiniteSemigroup,
        group: GradeGroup,
        mut degrees: Vec<Option<GroupElement>>,
    ) -> Result<Self, GradingError> {
        if degrees.len() != sg.order() {
            return Err(GradingError::InvalidGrading(format!("{} degrees for {} elements", degrees.len(), sg.order())));
        }
        degrees[sg.zero_index()] = None;
        for a in sg.nonzero() {
            match &degrees[a] {
                None => return Err(GradingError::InvalidGrading(format!("no degree for {}", sg.label(a)))),
                Some(d) if !group.contains(d) => {
                    return Err(GradingError::InvalidGrading(format!("degree {d} of {} not in {group}", sg.label(a))))
                }
                _ => {}
            }
        }
        Ok(Self { sg, group, degrees })
    }

    pub fn from_fn(
        sg: FiniteSemigroup,
        group: GradeGroup,
        deg: impl Fn(usize) -> GroupElement,
    ) -> Result<Self, GradingError> {
        let degrees = (0..sg.order()).map(|a| Some(deg(a))).collect();
        Self::new(sg, group, degrees)
    }

    /// Every nonzero element in degree ε.
    pub fn trivial(sg: FiniteSemigroup, group: GradeGroup) -> Self {
        let e = group.identity();
        Self::from_fn(sg, group, |_| e.clone()).expect("trivial grading")
    }

    /// Tabulates a finite graded backend.
    pub fn materialize<G: GradedSemigroup>(g: &G, bound: usize) -> Result<(FiniteGraded, Vec<G::Elem>), GradingError> {
        let (sg, elems) = materialize(g, bound)?;
        let degrees = elems.iter().map(|e| g.degree(e)).collect();
        Ok((FiniteGraded::new(sg, g.group().clone(), degrees)?, elems))
    }

    pub fn deg(&self, a: usize) -> Option<&GroupElement> {
        self.degrees[a].as_ref()
    }

    pub fn degrees(&self) -> &[Option<GroupElement>] {
        &self.degrees
    }

    pub fn order(&self) -> usize {
        self.sg.order()
    }

    /// Nonzero elements of each degree that occurs.
    pub fn components(&self) -> BTreeMap<GroupElement, BTreeSet<usize>> {
        let mut out: BTreeMap<GroupElement, BTreeSet<usize>> = BTreeMap::new();
        for a in self.sg.nonzero() {
            out.entry(self.degrees[a].clone().expect("nonzero")).or_default().insert(a);
        }
        out
    }

    /// Nonzero elements of degree `alpha`.
    pub fn component(&self, alpha: &GroupElement) -> Vec<usize> {
        self.sg.nonzero().filter(|&a| self.degrees[a].as_ref() == Some(alpha)).collect()
    }

    /// Reads `{"order", "zero", "table", "labels"?, "group", "degrees"}`;
    /// `degrees` lists one group element per index (the zero entry is ignored).
    /// `group` may be overridden by the caller.
    pub fn from_json(v: &Value, group_override: Option<&GradeGroup>) -> Result<Self, GradingError> {
        let sg = FiniteSemigroup::from_json(v)?;
        let group = match group_override {
            Some(g) => g.clone(),
            None => match v.get("group") {
                Some(g) => {
                    GradeGroup::from_json(g).map_err(|e| GradingError::InvalidGrading(format!("key \"group\": {e}")))?
                }
                None => GradeGroup::trivial(),
            },
        };
        let degrees = match v.get("degrees") {
            None => return Ok(FiniteGraded::trivial(sg, group)),
            Some(d) => d
                .as_array()
                .ok_or_else(|| GradingError::InvalidGrading("key \"degrees\" must be an array".into()))?
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    if i == sg.zero_index() || x.is_null() {
                        Ok(None)
                    } else {
                        group
                            .parse_element(x)
                            .map(Some)
                            .map_err(|e| GradingError::InvalidGrading(format!("key \"degrees\"[{i}]: {e}")))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        FiniteGraded::new(sg, group, degrees)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.sg.to_json();
        v["group"] = self.group.to_json();
        v["degrees"] = serde_json::to_value(&self.degrees).expect("serializable");
        v
    }
}

impl Semigroup for FiniteGraded {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.sg.zero_index()
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.sg.m(*a, *b)
    }
    fn enumerate(&self, _bound: usize) -> Vec<usize> {
        (0..self.sg.order()).collect()
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        self.sg.inv(*a)
    }
    fn render(&self, a: &usize) -> String {
        self.sg.label(*a).to_string()
    }
}

impl GradedSemigroup for FiniteGraded {
    fn group(&self) -> &GradeGroup {
        &self.group
    }
    fn degree(&self, a: &usize) -> Option<GroupElement> {
        self.degrees[*a].clone()
    }
}
