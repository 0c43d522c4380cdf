// SPDX-License-Identifier: Apache-2.0

//! The n-th Veronese subsemigroup: elements whose degree is divisible by `n`,
//! regraded by `S^(n)_α = S_{nα}`.

use grade_group::{GradeGroup, GroupElement};
use semigroup_core::Semigroup;

use crate::{GradedSemigroup, GradingError};

#[derive(Debug, Clone)]
pub struct Veronese<G> {
    pub base: G,
    pub n: i64,
}

pub fn veronese<G: GradedSemigroup>(base: G, n: i64) -> Result<Veronese<G>, GradingError> {
    if !base.group().is_torsion_free_abelian() {
        return Err(GradingError::GroupNotTorsionFreeAbelian);
    }
    if n == 0 {
        return Err(GradingError::ZeroVeroneseIndex);
    }
    Ok(Veronese { base, n })
}

/// `a / n` in a product of copies of ℤ, if it exists.
fn divide(group: &GradeGroup, a: &GroupElement, n: i64) -> Option<GroupElement> {
    match (group, a) {
        (GradeGroup::Integers, GroupElement::Int(x)) => (x % n == 0).then(|| GroupElement::Int(x / n)),
        (GradeGroup::Product(fs), GroupElement::Tuple(xs)) => {
            fs.iter().zip(xs).map(|(f, x)| divide(f, x, n)).collect::<Option<Vec<_>>>().map(GroupElement::Tuple)
        }
        // The trivial group.
        _ => Some(a.clone()),
    }
}

impl<G: GradedSemigroup> Veronese<G> {
    fn keeps(&self, a: &G::Elem) -> bool {
        self.base.is_zero(a) || self.base.degree(a).is_some_and(|d| divide(self.base.group(), &d, self.n).is_some())
    }
}

impl<G: GradedSemigroup> Semigroup for Veronese<G> {
    type Elem = G::Elem;

    fn zero(&self) -> Self::Elem {
        self.base.zero()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.base.mul(a, b)
    }
    fn enumerate(&self, bound: usize) -> Vec<Self::Elem> {
        self.base.enumerate(bound).into_iter().filter(|a| self.keeps(a)).collect()
    }
    fn is_finite(&self) -> bool {
        self.base.is_finite()
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.base.inverse(a)
    }
    fn size(&self, a: &Self::Elem) -> usize {
        self.base.size(a)
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.base.render(a)
    }
}

impl<G: GradedSemigroup> GradedSemigroup for Veronese<G> {
    fn group(&self) -> &GradeGroup {
        self.base.group()
    }
    fn degree(&self, a: &Self::Elem) -> Option<GroupElement> {
        self.base.degree(a).and_then(|d| divide(self.base.group(), &d, self.n))
    }
}
