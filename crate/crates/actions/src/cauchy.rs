// SPDX-License-Identifier: Apache-2.0

//! The Cauchy completion: objects are the idempotents (zero included),
//! morphisms `f → e` are triples `(e, s, f)` with `esf = s`, and
//! `(e,s,f)(f,t,g) = (e,st,g)`. For graded `S`, the left S-sets `Se(α)`.

use std::collections::BTreeSet;

use grading::FiniteGraded;
use semigroup_core::FiniteSemigroup;
use serde::Serialize;

use crate::sset::{graded_shift, is_action, GradedSSet, PointedSSet};

#[derive(Debug, Clone)]
pub struct CauchyCategory {
    pub objects: Vec<usize>,
    /// `(e, s, f)` as semigroup indices.
    pub morphisms: Vec<(usize, usize, usize)>,
    compose: Vec<Vec<Option<usize>>>,
    /// Composites of composable morphisms are morphisms.
    pub closed: bool,
    /// The number of morphisms `f → e` equals `|eSf|` for all `e, f`.
    pub hom_counts_match: bool,
}

impl CauchyCategory {
    /// `m·n` for `m = (e,s,f)`, `n = (f,t,g)`.
    pub fn compose(&self, m: usize, n: usize) -> Option<usize> {
        self.compose[m][n]
    }

    pub fn hom(&self, e: usize, f: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&i| self.morphisms[i].0 == e && self.morphisms[i].2 == f).collect()
    }
}

pub fn cauchy_completion(sg: &FiniteSemigroup) -> CauchyCategory {
    let objects = sg.idempotents();
    let mut morphisms = Vec::new();
    for &e in &objects {
        for &f in &objects {
            morphisms.extend((0..sg.order()).filter(|&s| sg.m(sg.m(e, s), f) == s).map(|s| (e, s, f)));
        }
    }
    let index = |m: (usize, usize, usize)| morphisms.iter().position(|&n| n == m);
    let mut closed = true;
    let k = morphisms.len();
    let mut compose = vec![vec![None; k]; k];
    for (i, &(e, s, f)) in morphisms.iter().enumerate() {
        for (j, &(f2, t, g)) in morphisms.iter().enumerate() {
            if f != f2 {
                continue;
            }
            match index((e, sg.m(s, t), g)) {
                Some(c) => compose[i][j] = Some(c),
                None => closed = false,
            }
        }
    }
    let hom_counts_match = objects.iter().all(|&e| {
        objects.iter().all(|&f| {
            let esf: BTreeSet<usize> = (0..sg.order()).map(|s| sg.m(sg.m(e, s), f)).collect();
            morphisms.iter().filter(|m| m.0 == e && m.2 == f).count() == esf.len()
        })
    });
    CauchyCategory { objects, morphisms, compose, closed, hom_counts_match }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectiveEntry {
    pub idempotent: String,
    pub alpha: String,
    pub points: usize,
    pub valid: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectiveReport {
    pub entries: Vec<ProjectiveEntry>,
    /// For each nonzero idempotent, the gradings of `Se(α)` differ for distinct `α`.
    pub distinct_for_distinct_alpha: bool,
    #[serde(skip)]
    pub sets: Vec<GradedSSet>,
}

/// `Se` as a graded left S-set with `deg(se) = deg(s)`.
pub fn principal_projective(gs: &FiniteGraded, e: usize) -> GradedSSet {
    let sg = &gs.sg;
    let keep: BTreeSet<usize> = (0..sg.order()).map(|s| sg.m(s, e)).chain([sg.zero_index()]).collect();
    let keep: Vec<usize> = keep.into_iter().collect();
    let pos = |p: usize| keep.iter().position(|&k| k == p).expect("Se is a left ideal");
    let action = (0..sg.order()).map(|s| keep.iter().map(|&x| pos(sg.m(s, x))).collect()).collect();
    let set = PointedSSet {
        points: keep.iter().map(|&x| sg.label(x).to_string()).collect(),
        zero: pos(sg.zero_index()),
        action,
    };
    GradedSSet { set, degrees: keep.iter().map(|&x| gs.deg(x).cloned()).collect() }
}

/// The graded S-sets `Se(α)` for every nonzero idempotent `e` and `α ∈ Γ`.
pub fn projective_indecomposables(gs: &FiniteGraded, group_bound: usize) -> ProjectiveReport {
    let sg = &gs.sg;
    let group = &gs.group;
    let alphas = group.enumerate(group_bound);
    let mut entries = Vec::new();
    let mut sets = Vec::new();
    let mut distinct = true;
    for e in sg.idempotents().into_iter().filter(|&e| e != sg.zero_index()) {
        let base = principal_projective(gs, e);
        let mut gradings = BTreeSet::new();
        for alpha in &alphas {
            let x = graded_shift(&base, group, alpha);
            let valid = is_action(sg, &x.set) && graded_ok(gs, &x);
            distinct &= gradings.insert(x.degrees.clone());
            entries.push(ProjectiveEntry {
                idempotent: sg.label(e).to_string(),
                alpha: alpha.to_string(),
                points: x.set.len(),
                valid,
            });
            sets.push(x);
        }
    }
    ProjectiveReport { entries, distinct_for_distinct_alpha: distinct, sets }
}

fn graded_ok(gs: &FiniteGraded, x: &GradedSSet) -> bool {
    gs.sg.nonzero().all(|s| {
        x.set.nonzero().all(|p| {
            let q = x.set.act(s, p);
            q == x.set.zero || x.deg(q) == Some(&gs.group.op(gs.deg(s).expect("nonzero"), x.deg(p).expect("nonzero")))
        })
    })
}
