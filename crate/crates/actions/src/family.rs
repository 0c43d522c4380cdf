// SPDX-License-Identifier: Apache-2.0

//! All graded unital S-sets on small carriers, up to isomorphism.

use std::collections::BTreeSet;

use grade_group::GroupElement;
use grading::FiniteGraded;

use crate::sset::{GradedSSet, PointedSSet};
use crate::ActionError;

/// Every graded unital S-set with at most `max_points` points (counting
/// `0_X`), one per isomorphism class. Point 0 is the zero point.
pub fn graded_unital_family(gs: &FiniteGraded, max_points: usize) -> Result<Vec<GradedSSet>, ActionError> {
    if !gs.group.is_finite() {
        return Err(ActionError::InfiniteGroup);
    }
    let group_elems = gs.group.enumerate(0);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=max_points.max(1) {
        let m = n - 1;
        let mut degrees = vec![0usize; m];
        loop {
            let degs: Vec<Option<GroupElement>> =
                std::iter::once(None).chain(degrees.iter().map(|&d| Some(group_elems[d].clone()))).collect();
            // Only keep nondecreasing degree vectors; permutations are isomorphic.
            if degrees.windows(2).all(|w| w[0] <= w[1]) {
                Search::new(gs, &degs).run(&mut |action| {
                    let set = PointedSSet {
                        points: (0..n).map(|p| if p == 0 { "0".into() } else { format!("x{p}") }).collect(),
                        zero: 0,
                        action: action.to_vec(),
                    };
                    if set.non_unital_point().is_none() {
                        let x = GradedSSet { set, degrees: degs.clone() };
                        if seen.insert(canonical(&x)) {
                            out.push(x);
                        }
                    }
                });
            }
            if !advance(&mut degrees, group_elems.len()) {
                break;
            }
        }
    }
    Ok(out)
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Backtracking over the cells `s·x` for nonzero `s` and `x`.
struct Search<'a> {
    gs: &'a FiniteGraded,
    cells: Vec<(usize, usize)>,
    options: Vec<Vec<usize>>,
    action: Vec<Vec<usize>>,
    assigned: Vec<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn new(gs: &'a FiniteGraded, degs: &[Option<GroupElement>]) -> Self {
        let n = degs.len();
        let order = gs.sg.order();
        let mut cells = Vec::new();
        let mut options = Vec::new();
        for s in gs.sg.nonzero() {
            for x in 1..n {
                let target = gs.group.op(gs.deg(s).expect("nonzero"), degs[x].as_ref().expect("nonzero"));
                let mut opts = vec![0];
                opts.extend((1..n).filter(|&y| degs[y].as_ref() == Some(&target)));
                cells.push((s, x));
                options.push(opts);
            }
        }
        // Zero row and zero column are forced.
        let mut assigned = vec![vec![false; n]; order];
        for (s, row) in assigned.iter_mut().enumerate() {
            row[0] = true;
            if s == gs.sg.zero_index() {
                row.iter_mut().for_each(|c| *c = true);
            }
        }
        Self { gs, cells, options, action: vec![vec![0; n]; order], assigned }
    }

    fn run(mut self, emit: &mut impl FnMut(&[Vec<usize>])) {
        self.step(0, emit);
    }

    fn step(&mut self, k: usize, emit: &mut impl FnMut(&[Vec<usize>])) {
        if k == self.cells.len() {
            emit(&self.action);
            return;
        }
        let (s, x) = self.cells[k];
        for i in 0..self.options[k].len() {
            self.action[s][x] = self.options[k][i];
            self.assigned[s][x] = true;
            if self.consistent(s, x) {
                self.step(k + 1, emit);
            }
        }
        self.assigned[s][x] = false;
    }

    /// `a(bx) = (ab)x` for every triple touching the new cell whose cells are all known.
    fn consistent(&self, s: usize, x: usize) -> bool {
        let sg = &self.gs.sg;
        let n = self.action[0].len();
        let known = |a: usize, p: usize| self.assigned[a][p];
        let check = |a: usize, b: usize, p: usize| -> bool {
            if !known(b, p) || !known(sg.m(a, b), p) {
                return true;
            }
            let bp = self.action[b][p];
            !known(a, bp) || self.action[a][bp] == self.action[sg.m(a, b)][p]
        };
        for a in 0..sg.order() {
            for b in 0..sg.order() {
                // The new cell can appear as b·p, as a·(bp) or as (ab)·p.
                if (b == s && !check(a, b, x)) || (sg.m(a, b) == s && !check(a, b, x)) {
                    return false;
                }
                if a == s {
                    for p in 0..n {
                        if known(b, p) && self.action[b][p] == x && !check(a, b, p) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Degrees and action table after relabelling.
type Relabelled = (Vec<Option<GroupElement>>, Vec<Vec<usize>>);

/// The lexicographically least relabelling of the nonzero points.
fn canonical(x: &GradedSSet) -> Relabelled {
    let n = x.set.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Relabelled> = None;
    loop {
        // perm maps old point -> new point, fixing 0.
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let degrees = (0..n).map(|new| x.degrees[inv[new]].clone()).collect();
        let action = x.set.action.iter().map(|row| (0..n).map(|new| perm[row[inv[new]]]).collect()).collect();
        let candidate = (degrees, action);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
        if !next_permutation(&mut perm[1..]) {
            break;
        }
    }
    best.expect("at least the identity permutation")
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else { return false };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}
