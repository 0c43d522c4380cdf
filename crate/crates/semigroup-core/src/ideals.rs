// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use serde::Serialize;

use crate::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
}

/// The principal ideal of `a` of the given kind (always containing zero).
pub fn principal_ideal(s: &FiniteSemigroup, a: usize, kind: IdealKind) -> BTreeSet<usize> {
    let n = s.order();
    let mut set = BTreeSet::from([a, s.zero_index()]);
    match kind {
        IdealKind::Left => set.extend((0..n).map(|x| s.m(x, a))),
        IdealKind::Right => set.extend((0..n).map(|x| s.m(a, x))),
        IdealKind::TwoSided => {
            let right: Vec<usize> = std::iter::once(a).chain((0..n).map(|x| s.m(a, x))).collect();
            for &r in &right {
                set.insert(r);
                set.extend((0..n).map(|y| s.m(y, r)));
            }
        }
    }
    set
}

pub fn is_ideal(s: &FiniteSemigroup, set: &BTreeSet<usize>, kind: IdealKind) -> bool {
    set.contains(&s.zero_index())
        && set.iter().all(|&a| {
            (0..s.order()).all(|x| {
                let left_ok = kind == IdealKind::Right || set.contains(&s.m(x, a));
                let right_ok = kind == IdealKind::Left || set.contains(&s.m(a, x));
                left_ok && right_ok
            })
        })
}

/// All ideals of the given kind. Every ideal is a union of principal ideals,
/// so the family is the closure of `{0}` and the principal ideals under union.
pub fn ideals(s: &FiniteSemigroup, kind: IdealKind) -> Vec<BTreeSet<usize>> {
    let principals: BTreeSet<BTreeSet<usize>> = (0..s.order()).map(|a| principal_ideal(s, a, kind)).collect();
    let mut family: BTreeSet<BTreeSet<usize>> = BTreeSet::from([BTreeSet::from([s.zero_index()])]);
    for p in &principals {
        let grown: Vec<BTreeSet<usize>> = family.iter().map(|i| i.union(p).copied().collect()).collect();
        family.extend(grown);
    }
    let mut out: Vec<BTreeSet<usize>> = family.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
