// SPDX-License-Identifier: Apache-2.0

use grade_group::{GradeGroup, GroupElement};
use grading::GradedSemigroup;
use graphs::WeightMap;
use semigroup_core::Semigroup;

use crate::{GisBackend, GisElement, GisError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GisGrading {
    /// `xy⁻¹ ↦ |x| − |y|` in ℤ.
    Natural,
    /// The natural grading reduced modulo `n`.
    Mod(u64),
    /// `xy⁻¹ ↦ ω(x)ω(y)⁻¹`.
    Weight(WeightMap),
}

impl GisGrading {
    pub fn group(&self) -> Result<GradeGroup, GisError> {
        match self {
            Self::Natural => Ok(GradeGroup::Integers),
            Self::Mod(0) => Err(GisError::ZeroModulus),
            Self::Mod(n) => Ok(GradeGroup::Cyclic(*n)),
            Self::Weight(w) => Ok(w.group.clone()),
        }
    }

    fn degree(&self, a: &GisElement) -> Option<GroupElement> {
        let GisElement::Pair(x, y) = a else { return None };
        let diff = x.len() as i64 - y.len() as i64;
        Some(match self {
            Self::Natural => GroupElement::Int(diff),
            Self::Mod(n) => GroupElement::Residue(diff.rem_euclid(*n as i64) as u64),
            Self::Weight(w) => w.group.div(&w.of_path(x), &w.of_path(y)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseAndDegree {
    pub inverse: GisElement,
    pub degree: GroupElement,
}

pub fn gis_inverse_and_degree(a: &GisElement, grading: &GisGrading) -> Result<InverseAndDegree, GisError> {
    let degree = grading.degree(a).ok_or(GisError::ZeroElement)?;
    Ok(InverseAndDegree { inverse: a.inverse(), degree })
}

/// `𝒮(E)` with one of its gradings.
#[derive(Debug, Clone)]
pub struct GradedGis {
    pub backend: GisBackend,
    pub grading: GisGrading,
    group: GradeGroup,
}

impl GradedGis {
    pub fn new(backend: GisBackend, grading: GisGrading) -> Result<Self, GisError> {
        let group = grading.group()?;
        Ok(Self { backend, grading, group })
    }

    pub fn natural(backend: GisBackend) -> Self {
        Self::new(backend, GisGrading::Natural).expect("ℤ")
    }
}

impl Semigroup for GradedGis {
    type Elem = GisElement;

    fn zero(&self) -> GisElement {
        GisElement::Zero
    }
    fn mul(&self, a: &GisElement, b: &GisElement) -> GisElement {
        self.backend.mul(a, b)
    }
    fn enumerate(&self, bound: usize) -> Vec<GisElement> {
        self.backend.enumerate(bound)
    }
    fn is_finite(&self) -> bool {
        self.backend.is_finite()
    }
    fn inverse(&self, a: &GisElement) -> Option<GisElement> {
        Some(a.inverse())
    }
    fn size(&self, a: &GisElement) -> usize {
        a.size()
    }
    fn render(&self, a: &GisElement) -> String {
        self.backend.render(a)
    }
}

impl GradedSemigroup for GradedGis {
    fn group(&self) -> &GradeGroup {
        &self.group
    }
    fn degree(&self, a: &GisElement) -> Option<GroupElement> {
        self.grading.degree(a)
    }
}
