// SPDX-License-Identifier: Apache-2.0

//! Properties shared between a graded semigroup and its identity component.

use std::collections::BTreeSet;

use semigroup_core::{ideals, inverse_structure, local_units_report, natural_leq, FiniteSemigroup, IdealKind};
use serde::Serialize;

use crate::{is_strongly_graded, Bounds, FiniteGraded, GradingError};

/// `u ≤ s` with `u` a nonzero idempotent forces `s` idempotent.
/// `None` for non-inverse semigroups.
pub fn is_zero_e_unitary(s: &FiniteSemigroup) -> Option<bool> {
    if !s.is_inverse() {
        return None;
    }
    let idem: Vec<usize> = s.idempotents().into_iter().filter(|&u| u != s.zero_index()).collect();
    Some((0..s.order()).all(|x| s.m(x, x) == x || !idem.iter().any(|u| natural_leq(s, u, &x).expect("inverse"))))
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularityTransfer {
    pub s_regular: bool,
    pub eps_regular: bool,
    pub s_inverse: bool,
    pub eps_inverse: bool,
}

impl RegularityTransfer {
    pub fn agrees(&self) -> bool {
        self.s_regular == self.eps_regular && self.s_inverse == self.eps_inverse
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealCorrespondence {
    pub kind: IdealKind,
    pub ideals_of_s: usize,
    pub ideals_of_eps: usize,
    /// `I ↦ I ∩ S_ε` is injective and onto the ideals of `S_ε`.
    pub bijective: bool,
    /// `S·(I ∩ S_ε) = I` (resp. `(I ∩ S_ε)·S`) for every ideal `I`.
    pub inverse_map_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EpsilonReport {
    #[serde(skip)]
    pub s_eps: FiniteSemigroup,
    /// Index in `S` of each element of `S_ε`.
    pub embedding: Vec<usize>,
    /// 0-E-unitarity of `(S, S_ε)`, for inverse `S`.
    pub zero_e_unitary: Option<(bool, bool)>,
    pub strongly_graded: bool,
    pub has_local_units: bool,
    /// Reported when `S` is strongly graded with local units.
    pub regularity_transfer: Option<RegularityTransfer>,
    /// Reported when `S` is regular.
    pub ideal_correspondence: Vec<IdealCorrespondence>,
    /// Two-sided ideals other than `{0}` and the whole semigroup, for `(S, S_ε)`.
    pub nontrivial_two_sided: (usize, usize),
}

fn nontrivial(s: &FiniteSemigroup, kind: IdealKind) -> usize {
    ideals(s, kind).iter().filter(|i| i.len() > 1 && i.len() < s.order()).count()
}

fn correspondence(
    gs: &FiniteGraded,
    s_eps: &FiniteSemigroup,
    embedding: &[usize],
    kind: IdealKind,
) -> IdealCorrespondence {
    let s = &gs.sg;
    let big = ideals(s, kind);
    let small: BTreeSet<BTreeSet<usize>> = ideals(s_eps, kind).into_iter().collect();
    let restrict = |i: &BTreeSet<usize>| -> BTreeSet<usize> {
        embedding.iter().enumerate().filter(|(_, old)| i.contains(old)).map(|(new, _)| new).collect()
    };
    let images: Vec<BTreeSet<usize>> = big.iter().map(restrict).collect();
    let distinct: BTreeSet<BTreeSet<usize>> = images.iter().cloned().collect();
    let bijective = distinct.len() == images.len() && distinct == small;
    let inverse_map_ok = big.iter().zip(&images).all(|(i, j)| {
        let mut grown: BTreeSet<usize> = BTreeSet::from([s.zero_index()]);
        for &new in j {
            let old = embedding[new];
            for x in 0..s.order() {
                grown.insert(if kind == IdealKind::Left { s.m(x, old) } else { s.m(old, x) });
            }
        }
        grown == *i
    });
    IdealCorrespondence { kind, ideals_of_s: big.len(), ideals_of_eps: small.len(), bijective, inverse_map_ok }
}

pub fn epsilon_transfer_report(gs: &FiniteGraded) -> Result<EpsilonReport, GradingError> {
    let s = &gs.sg;
    let eps = gs.group.identity();
    let mut keep = gs.component(&eps);
    keep.push(s.zero_index());
    let (s_eps, embedding) = s.restrict(&keep)?;

    let zero_e_unitary =
        is_zero_e_unitary(s).map(|a| (a, is_zero_e_unitary(&s_eps).expect("S_ε of an inverse semigroup is inverse")));
    let strongly_graded = is_strongly_graded(gs, Bounds::default()).is_holds();
    let has_local_units = local_units_report(s, 0).has_local_units;
    let full = inverse_structure(s, 0);
    let part = inverse_structure(&s_eps, 0);
    let regularity_transfer = (strongly_graded && has_local_units).then_some(RegularityTransfer {
        s_regular: full.is_regular,
        eps_regular: part.is_regular,
        s_inverse: full.is_inverse,
        eps_inverse: part.is_inverse,
    });
    let ideal_correspondence = if full.is_regular {
        vec![
            correspondence(gs, &s_eps, &embedding, IdealKind::Left),
            correspondence(gs, &s_eps, &embedding, IdealKind::Right),
        ]
    } else {
        Vec::new()
    };
    let nontrivial_two_sided = (nontrivial(s, IdealKind::TwoSided), nontrivial(&s_eps, IdealKind::TwoSided));
    Ok(EpsilonReport {
        s_eps,
        embedding,
        zero_e_unitary,
        strongly_graded,
        has_local_units,
        regularity_transfer,
        ideal_correspondence,
        nontrivial_two_sided,
    })
}
