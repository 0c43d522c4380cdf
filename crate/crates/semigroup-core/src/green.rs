// SPDX-License-Identifier: Apache-2.0

//! Green's relations of finite semigroups.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::finite::materialize;
use crate::{FiniteSemigroup, Semigroup, SemigroupError};

/// A partition into classes; classes and their members are sorted.
pub type Partition<E> = Vec<Vec<E>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenClasses<E: Ord> {
    pub l: Partition<E>,
    pub r: Partition<E>,
    pub h: Partition<E>,
    pub d: Partition<E>,
    pub j: Partition<E>,
}

impl<E: Ord + Clone> GreenClasses<E> {
    pub fn map<F: Ord + Clone>(&self, f: impl Fn(&E) -> F) -> GreenClasses<F> {
        let conv = |p: &Partition<E>| normalize(p.iter().map(|c| c.iter().map(&f).collect()).collect());
        GreenClasses { l: conv(&self.l), r: conv(&self.r), h: conv(&self.h), d: conv(&self.d), j: conv(&self.j) }
    }
}

pub fn normalize<E: Ord>(mut p: Partition<E>) -> Partition<E> {
    for c in p.iter_mut() {
        c.sort();
    }
    p.sort();
    p
}

/// Groups `0..n` by equal keys.
fn classes_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Partition<usize> {
    let mut by: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for a in 0..n {
        by.entry(key(a)).or_default().push(a);
    }
    normalize(by.into_values().collect())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn green_classes(s: &FiniteSemigroup) -> GreenClasses<usize> {
    let n = s.order();
    // Principal ideals S¹a, aS¹ and S¹aS¹ as membership vectors.
    let left: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut v = vec![false; n];
            v[a] = true;
            for x in 0..n {
                v[s.m(x, a)] = true;
            }
            v
        })
        .collect();
    let right: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut v = vec![false; n];
            v[a] = true;
            for x in 0..n {
                v[s.m(a, x)] = true;
            }
            v
        })
        .collect();
    let two: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut v = right[a].clone();
            for x in 0..n {
                if right[a][x] {
                    for y in 0..n {
                        v[s.m(y, x)] = true;
                    }
                }
            }
            v
        })
        .collect();
    let l = classes_by_key(n, |a| left[a].clone());
    let r = classes_by_key(n, |a| right[a].clone());
    let h = classes_by_key(n, |a| (left[a].clone(), right[a].clone()));
    let j = classes_by_key(n, |a| two[a].clone());
    // D is the join of L and R.
    let mut parent: Vec<usize> = (0..n).collect();
    for class in l.iter().chain(r.iter()) {
        for w in class.windows(2) {
            let (x, y) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[x] = y;
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| find(&mut parent, a)).collect();
    let d = classes_by_key(n, |a| roots[a]);
    GreenClasses { l, r, h, d, j }
}

/// Green's classes of any finite backend, in its own element type.
pub fn green_classes_of<S: Semigroup>(s: &S) -> Result<GreenClasses<S::Elem>, SemigroupError> {
    if !s.is_finite() {
        return Err(SemigroupError::InfiniteBackend);
    }
    let (fs, elems) = materialize(s, 0)?;
    Ok(green_classes(&fs).map(|&i| elems[i].clone()))
}
