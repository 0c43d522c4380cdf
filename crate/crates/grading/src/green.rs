// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use semigroup_core::green::normalize;
use semigroup_core::{green_classes, Partition};
use serde::Serialize;

use crate::FiniteGraded;

#[derive(Debug, Clone, Serialize)]
pub struct GradedGreen {
    pub l: Partition<usize>,
    pub r: Partition<usize>,
    pub h: Partition<usize>,
    pub d: Partition<usize>,
    pub j: Partition<usize>,
    /// For every `s R t`, right translation `x ↦ xu` (with `t = su`) maps
    /// `(L_s)_α` onto `(L_t)_{α·deg(s)⁻¹deg(t)}`.
    pub green_lemma_holds: bool,
    /// Whether the shift `deg(t)·deg(s)⁻¹` also works (it does when Γ is abelian).
    pub left_shift_form_holds: bool,
}

fn refine(p: &Partition<usize>, gs: &FiniteGraded) -> Partition<usize> {
    let mut out = Vec::new();
    for class in p {
        let mut by: BTreeMap<Option<&grade_group::GroupElement>, Vec<usize>> = BTreeMap::new();
        for &x in class {
            by.entry(gs.deg(x)).or_default().push(x);
        }
        out.extend(by.into_values());
    }
    normalize(out)
}

pub fn graded_green(gs: &FiniteGraded) -> GradedGreen {
    let s = &gs.sg;
    let group = &gs.group;
    let plain = green_classes(s);
    let n = s.order();
    let class_of = |p: &Partition<usize>, a: usize| p.iter().find(|c| c.contains(&a)).expect("partition").clone();
    let mut lemma = true;
    let mut left_form = true;
    for r_class in &plain.r {
        for &a in r_class {
            for &b in r_class {
                if a == s.zero_index() {
                    continue;
                }
                // t = s·u with u ∈ S¹; u = 1 when s = t.
                let u = if a == b { None } else { (0..n).find(|&u| s.m(a, u) == b) };
                if a != b && u.is_none() {
                    lemma = false;
                    continue;
                }
                let translate = |x: usize| u.map_or(x, |u| s.m(x, u));
                let l_a = class_of(&plain.l, a);
                let l_b = class_of(&plain.l, b);
                let (da, db) = (gs.deg(a).expect("nonzero"), gs.deg(b).expect("nonzero"));
                let right_shift = group.op(&group.inv(da), db);
                let left_shift = group.op(db, &group.inv(da));
                let mut image: Vec<usize> = l_a.iter().map(|&x| translate(x)).collect();
                image.sort_unstable();
                if image != l_b {
                    lemma = false;
                }
                for &x in &l_a {
                    let dx = gs.deg(x).expect("nonzero");
                    let dy = gs.deg(translate(x)).expect("nonzero");
                    if *dy != group.op(dx, &right_shift) {
                        lemma = false;
                    }
                    if *dy != group.op(dx, &left_shift) {
                        left_form = false;
                    }
                }
            }
        }
    }
    GradedGreen {
        l: refine(&plain.l, gs),
        r: refine(&plain.r, gs),
        h: refine(&plain.h, gs),
        d: refine(&plain.d, gs),
        j: refine(&plain.j, gs),
        green_lemma_holds: lemma,
        left_shift_form_holds: left_form,
    }
}
