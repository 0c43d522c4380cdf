// SPDX-License-Identifier: Apache-2.0

//! Sets of path lengths. Each is eventually periodic because it is read off
//! a deterministic walk through the finite space of vertex subsets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;

use grading::Verdict;
use serde::Serialize;

use crate::Graph;

/// A set of naturals `{k < T : k ∈ explicit} ∪ {k ≥ T : k mod P ∈ residues}`
/// with `T` minimal and then `P` minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EventuallyPeriodicSet {
    threshold: usize,
    period: usize,
    explicit: BTreeSet<usize>,
    residues: BTreeSet<usize>,
}

impl EventuallyPeriodicSet {
    /// From membership bits for `0..threshold + period`, where the bits from
    /// `threshold` on repeat with the given period.
    pub fn from_bits(bits: &[bool], threshold: usize, period: usize) -> Self {
        assert!(period >= 1 && bits.len() >= threshold + period, "need one full period of bits");
        let at = |k: usize| if k < threshold { bits[k] } else { bits[threshold + (k - threshold) % period] };
        let mut p = period;
        for d in (1..period).filter(|d| period.is_multiple_of(*d)) {
            if (threshold..threshold + period).all(|k| at(k) == at(k + d)) {
                p = d;
                break;
            }
        }
        let mut t = threshold;
        while t > 0 && at(t - 1) == at(t - 1 + p) {
            t -= 1;
        }
        Self {
            threshold: t,
            period: p,
            explicit: (0..t).filter(|&k| at(k)).collect(),
            residues: (t..t + p).filter(|&k| at(k)).map(|k| k % p).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::from_bits(&[false], 0, 1)
    }

    pub fn naturals() -> Self {
        Self::from_bits(&[true], 0, 1)
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn explicit(&self) -> &BTreeSet<usize> {
        &self.explicit
    }

    pub fn residues(&self) -> &BTreeSet<usize> {
        &self.residues
    }

    pub fn contains(&self, k: usize) -> bool {
        if k < self.threshold {
            self.explicit.contains(&k)
        } else {
            self.residues.contains(&(k % self.period))
        }
    }

    pub fn is_empty(&self) -> bool {
        self.explicit.is_empty() && self.residues.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn members_below(&self, bound: usize) -> Vec<usize> {
        (0..bound).filter(|&k| self.contains(k)).collect()
    }
}

impl fmt::Display for EventuallyPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<usize>| s.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}", list(&self.explicit))?;
        if !self.residues.is_empty() {
            write!(f, " ∪ {{k ≥ {} : k mod {} ∈ {{{}}}}}", self.threshold, self.period, list(&self.residues))?;
        }
        Ok(())
    }
}

/// Iterates `step` from `init` until a state repeats; returns the visited
/// states with the index where the cycle starts and its length.
fn orbit<S: Clone + Eq + Hash>(init: S, step: impl Fn(&S) -> S) -> (Vec<S>, usize, usize) {
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut current = init;
    loop {
        if let Some(&first) = seen.get(&current) {
            let period = states.len() - first;
            return (states, first, period);
        }
        seen.insert(current.clone(), states.len());
        states.push(current.clone());
        current = step(&current);
    }
}

/// `{|y| : r(y) = v}`: the vertices at backward distance `k` form the `k`-th
/// state and `k` is a member iff that state is nonempty.
pub fn in_length_set(g: &Graph, v: usize) -> EventuallyPeriodicSet {
    let mut init = vec![false; g.vertex_count()];
    init[v] = true;
    let (states, t, p) = orbit(init, |cur| {
        let mut next = vec![false; g.vertex_count()];
        for (w, _) in cur.iter().enumerate().filter(|(_, &on)| on) {
            for &e in g.in_edges(w) {
                next[g.edge(e).src] = true;
            }
        }
        next
    });
    let bits: Vec<bool> = states.iter().map(|s| s.iter().any(|&b| b)).collect();
    EventuallyPeriodicSet::from_bits(&bits, t, p)
}

/// For each `w`, the lengths of paths from `v` to `w`.
pub fn out_length_sets(g: &Graph, v: usize) -> Vec<EventuallyPeriodicSet> {
    let mut init = vec![false; g.vertex_count()];
    init[v] = true;
    let (states, t, p) = orbit(init, |cur| {
        let mut next = vec![false; g.vertex_count()];
        for (u, _) in cur.iter().enumerate().filter(|(_, &on)| on) {
            for &e in g.out_edges(u) {
                next[g.edge(e).rng] = true;
            }
        }
        next
    });
    (0..g.vertex_count())
        .map(|w| {
            let bits: Vec<bool> = states.iter().map(|s| s[w]).collect();
            EventuallyPeriodicSet::from_bits(&bits, t, p)
        })
        .collect()
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest threshold and least common period of a family of sets.
pub(crate) fn common_threshold_and_period<'a>(
    sets: impl IntoIterator<Item = &'a EventuallyPeriodicSet>,
) -> (usize, usize) {
    sets.into_iter().fold((0, 1), |(t, p), s| (t.max(s.threshold), p / gcd(p, s.period) * s.period))
}

/// Whether `a − b = n` for some `a ∈ outs`, `b ∈ ins`, given that both sets
/// are periodic with period `p` from `t` on.
fn difference_contains(outs: &EventuallyPeriodicSet, ins: &EventuallyPeriodicSet, n: i64, t: usize, p: usize) -> bool {
    let lo = n.max(0) as usize;
    let hi = lo + t + n.unsigned_abs() as usize + p;
    (lo..hi).any(|a| outs.contains(a) && ins.contains((a as i64 - n) as usize))
}

/// For every vertex `v` and every `n ∈ ℤ` there are paths `x, y` with
/// `s(x) = v`, `r(x) = r(y)` and `|x| − |y| = n`.
///
/// Writing `D(v)` for the set of such differences, both tails of `D(v)` repeat
/// with the common period `P` beyond the common threshold `T`, so checking
/// `|n| ≤ T + P` decides `D(v) = ℤ`. A failure reports the smallest `|n|`.
pub fn locally_strong_condition(g: &Graph) -> Verdict {
    let ins: Vec<EventuallyPeriodicSet> = (0..g.vertex_count()).map(|w| in_length_set(g, w)).collect();
    let mut worst: Option<(i64, usize)> = None;
    let mut scanned = 0;
    for v in 0..g.vertex_count() {
        let outs = out_length_sets(g, v);
        let (t, p) = common_threshold_and_period(outs.iter().chain(&ins));
        let reach = (t + p) as i64;
        scanned = scanned.max(reach as usize);
        let covered = |n: i64| (0..g.vertex_count()).any(|w| difference_contains(&outs[w], &ins[w], n, t, p));
        let order = (0..=reach).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] });
        if let Some(n) = order.into_iter().find(|&n| !covered(n)) {
            if worst.is_none_or(|(m, _)| n.abs() < m.abs() || (n.abs() == m.abs() && n > m)) {
                worst = Some((n, v));
            }
        }
    }
    match worst {
        None => Verdict::holds("every difference set D(v) is all of ℤ (checked |n| ≤ T+P)")
            .with_bound("difference_range", scanned),
        Some((n, v)) => Verdict::fails(
            format!("no paths x, y with s(x) = {}, r(x) = r(y) and |x| − |y| = {n}", g.vertex_name(v)),
            vec![g.vertex_name(v).to_string(), n.to_string()],
        ),
    }
}
