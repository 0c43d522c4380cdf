// SPDX-License-Identifier: Apache-2.0

//! Partial bijections of `{0, …, n-1}`.

use std::fmt;

/// `map[x] = Some(y)` when `x` is in the domain and is sent to `y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    map: Vec<Option<usize>>,
}

impl PartialBijection {
    /// Panics if `map` is not injective on its domain or leaves `0..n`.
    pub fn new(map: Vec<Option<usize>>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for y in map.iter().flatten() {
            assert!(*y < n && !seen[*y], "not a partial bijection: {map:?}");
            seen[*y] = true;
        }
        Self { map }
    }

    pub fn empty(n: usize) -> Self {
        Self { map: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).map(Some).collect() }
    }

    /// Identity on `domain`.
    pub fn restriction_identity(n: usize, domain: &[usize]) -> Self {
        let mut map = vec![None; n];
        for &x in domain {
            map[x] = Some(x);
        }
        Self { map }
    }

    pub fn points(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.map
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        PartialBijection { map: other.map.iter().map(|y| y.and_then(|y| self.map[y])).collect() }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut map = vec![None; self.map.len()];
        for (x, y) in self.map.iter().enumerate() {
            if let Some(y) = y {
                map[*y] = Some(x);
            }
        }
        PartialBijection { map }
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.map.len()).filter(|&x| self.map[x].is_some()).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.map.iter().flatten().copied().collect();
        im.sort_unstable();
        im
    }

    pub fn is_empty(&self) -> bool {
        self.map.iter().all(Option::is_none)
    }

    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// Every partial bijection of `n` points, ordered by rank then lexicographically.
    pub fn all(n: usize) -> Vec<PartialBijection> {
        let mut out = Vec::new();
        let mut current = vec![None; n];
        let mut used = vec![false; n];
        fn rec(x: usize, current: &mut Vec<Option<usize>>, used: &mut Vec<bool>, out: &mut Vec<PartialBijection>) {
            if x == current.len() {
                out.push(PartialBijection { map: current.clone() });
                return;
            }
            current[x] = None;
            rec(x + 1, current, used, out);
            for y in 0..current.len() {
                if !used[y] {
                    used[y] = true;
                    current[x] = Some(y);
                    rec(x + 1, current, used, out);
                    current[x] = None;
                    used[y] = false;
                }
            }
        }
        rec(0, &mut current, &mut used, &mut out);
        out.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.cmp(b)));
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> =
            self.map.iter().enumerate().filter_map(|(x, y)| y.map(|y| format!("{}->{}", names[x], names[y]))).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.map.len()).map(|i| i.to_string()).collect();
        write!(f, "{}", self.render(&names))
    }
}
