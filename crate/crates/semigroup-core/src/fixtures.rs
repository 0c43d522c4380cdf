// SPDX-License-Identifier: Apache-2.0

//! Small semigroups used throughout the test suites.

use crate::{FiniteSemigroup, PartialBijection, Semigroup};

/// The cyclic group of order `n` with a zero adjoined: `0, 1, a, a2, …`.
/// Index 0 is zero and index `k + 1` is `a^k`.
pub fn group_with_zero(n: usize) -> FiniteSemigroup {
    assert!(n >= 1);
    let mut labels = vec!["0".to_string(), "1".to_string()];
    for k in 1..n {
        labels.push(if k == 1 { "a".to_string() } else { format!("a{k}") });
    }
    FiniteSemigroup::from_fn(labels, 0, |x, y| if x == 0 || y == 0 { 0 } else { (x - 1 + y - 1) % n + 1 })
        .expect("cyclic group with zero")
}

/// The symmetric inverse monoid on `n` points, with the empty map as zero.
/// Composition applies the right factor first.
pub fn symmetric_inverse_monoid(n: usize, names: &[&str]) -> (FiniteSemigroup, Vec<PartialBijection>) {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    assert_eq!(names.len(), n);
    let maps = PartialBijection::all(n);
    let labels = maps.iter().map(|m| m.render(&names)).collect();
    let index = |p: &PartialBijection| maps.iter().position(|q| q == p).expect("closed");
    let sg = FiniteSemigroup::from_fn(labels, 0, |a, b| index(&maps[a].compose(&maps[b]))).expect("I(X)");
    (sg, maps)
}

/// I({x,y}) in the order `0, 1, τ, θxx, θxy, θyx, θyy`, where `θij` has
/// domain `{j}` and image `{i}`.
pub fn symmetric_inverse_monoid_xy() -> (FiniteSemigroup, Vec<PartialBijection>) {
    let (x, y) = (0usize, 1usize);
    let theta = |i: usize, j: usize| {
        let mut m = vec![None, None];
        m[j] = Some(i);
        PartialBijection::new(m)
    };
    let maps = vec![
        PartialBijection::empty(2),
        PartialBijection::identity(2),
        PartialBijection::new(vec![Some(y), Some(x)]),
        theta(x, x),
        theta(x, y),
        theta(y, x),
        theta(y, y),
    ];
    let labels = ["0", "1", "τ", "θxx", "θxy", "θyx", "θyy"].iter().map(|s| s.to_string()).collect();
    let index = |p: &PartialBijection| maps.iter().position(|q| q == p).expect("closed");
    let sg = FiniteSemigroup::from_fn(labels, 0, |a, b| index(&maps[a].compose(&maps[b]))).expect("I({x,y})");
    (sg, maps)
}

/// The interval semigroup `B = (I×I) ∪ {0}` with `(p,q)(s,t) = (p,t)` if
/// `q = s`. Index 0 is zero; pairs follow in lexicographic order.
pub fn interval_semigroup(lo: i64, hi: i64) -> (FiniteSemigroup, Vec<(i64, i64)>) {
    let pairs: Vec<(i64, i64)> = (lo..=hi).flat_map(|p| (lo..=hi).map(move |q| (p, q))).collect();
    let mut labels = vec!["0".to_string()];
    labels.extend(pairs.iter().map(|(p, q)| format!("({p},{q})")));
    let sg = FiniteSemigroup::from_fn(labels, 0, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let (p, q) = pairs[a - 1];
        let (s, t) = pairs[b - 1];
        if q == s {
            1 + pairs.iter().position(|&x| x == (p, t)).unwrap()
        } else {
            0
        }
    })
    .expect("interval semigroup");
    (sg, pairs)
}

/// `{0, n1, …, nk}` with every product zero. No local units.
pub fn null_semigroup(k: usize) -> FiniteSemigroup {
    let labels = std::iter::once("0".to_string()).chain((1..=k).map(|i| format!("n{i}"))).collect();
    FiniteSemigroup::from_fn(labels, 0, |_, _| 0).expect("null semigroup")
}

/// Left-zero band with zero adjoined: `xy = x` for nonzero `x, y`.
/// Regular with local units, not inverse for `k ≥ 2`.
pub fn left_zero_band(k: usize) -> FiniteSemigroup {
    let labels = std::iter::once("0".to_string()).chain((1..=k).map(|i| format!("b{i}"))).collect();
    FiniteSemigroup::from_fn(labels, 0, |x, y| if x == 0 || y == 0 { 0 } else { x }).expect("band")
}

/// Free semigroup on `letters` generators with a zero adjoined; words are
/// `Some(letters)`, zero is `None`. Size of a word is its length.
#[derive(Debug, Clone)]
pub struct FreeSemigroup {
    pub letters: u8,
}

impl Semigroup for FreeSemigroup {
    type Elem = Option<Vec<u8>>;

    fn zero(&self) -> Self::Elem {
        None
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.iter().chain(y).copied().collect()),
            _ => None,
        }
    }
    fn enumerate(&self, bound: usize) -> Vec<Self::Elem> {
        let mut out = vec![None];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..bound {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..self.letters).map(move |c| {
                        let mut v = w.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned().map(Some));
        }
        out
    }
    fn is_finite(&self) -> bool {
        false
    }
    fn size(&self, a: &Self::Elem) -> usize {
        a.as_ref().map_or(0, Vec::len)
    }
    fn render(&self, a: &Self::Elem) -> String {
        match a {
            None => "0".into(),
            Some(w) => w.iter().map(|&c| (b'a' + c) as char).collect(),
        }
    }
}
