// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::{Semigroup, SemigroupError};

#[derive(Debug, Clone, Serialize)]
pub struct InverseReport<E: Ord> {
    pub is_regular: bool,
    pub is_inverse: bool,
    /// Elements with exactly one inner inverse, mapped to it.
    pub inverses: BTreeMap<E, E>,
    pub idempotents: BTreeSet<E>,
    /// True when computed on a bounded fragment of an infinite backend.
    pub fragment: bool,
}

/// Regularity, inverse-ness and idempotents of the enumerated fragment.
pub fn inverse_structure<S: Semigroup>(s: &S, bound: usize) -> InverseReport<S::Elem> {
    let elems = s.enumerate(bound);
    let idempotents: BTreeSet<S::Elem> = elems.iter().filter(|a| s.is_idempotent(a)).cloned().collect();
    let mut is_regular = true;
    let mut is_inverse = true;
    let mut inverses = BTreeMap::new();
    for a in &elems {
        let mut found: Vec<&S::Elem> = Vec::new();
        for t in &elems {
            let at = s.mul(a, t);
            if s.mul(&at, a) == *a && s.mul(&s.mul(t, a), t) == *t {
                found.push(t);
                if found.len() > 1 {
                    break;
                }
            }
        }
        match found.len() {
            0 => {
                is_regular = false;
                is_inverse = false;
            }
            1 => {
                inverses.insert(a.clone(), found[0].clone());
            }
            _ => is_inverse = false,
        }
    }
    InverseReport { is_regular, is_inverse, inverses, idempotents, fragment: !s.is_finite() }
}

/// Natural partial order: `a ≤ b` iff `a = b·u` for an idempotent `u`.
/// Uses `u = a⁻¹a`, which is a witness whenever any witness exists.
pub fn natural_leq<S: Semigroup>(s: &S, a: &S::Elem, b: &S::Elem) -> Result<bool, SemigroupError> {
    let a_inv = s.inverse(a).ok_or(SemigroupError::NotInverse)?;
    Ok(s.mul(b, &s.mul(&a_inv, a)) == *a)
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalUnitsReport<E: Ord> {
    pub has_local_units: bool,
    pub has_common_local_units: bool,
    /// For each nonzero element, one pair `(u, v)` with `us = s = sv`.
    pub witnesses: BTreeMap<E, (E, E)>,
    /// An element without local units, or a pair without common ones.
    pub failure: Option<Vec<E>>,
    pub fragment: bool,
}

pub fn local_units_report<S: Semigroup>(s: &S, bound: usize) -> LocalUnitsReport<S::Elem> {
    let elems: Vec<S::Elem> = s.enumerate(bound).into_iter().filter(|a| !s.is_zero(a)).collect();
    let idempotents: Vec<S::Elem> = s.enumerate(bound).into_iter().filter(|a| s.is_idempotent(a)).collect();
    let mut left: Vec<BTreeSet<usize>> = Vec::with_capacity(elems.len());
    let mut right: Vec<BTreeSet<usize>> = Vec::with_capacity(elems.len());
    let mut witnesses = BTreeMap::new();
    let mut failure = None;
    for a in &elems {
        let l: BTreeSet<usize> = (0..idempotents.len()).filter(|&i| s.mul(&idempotents[i], a) == *a).collect();
        let r: BTreeSet<usize> = (0..idempotents.len()).filter(|&i| s.mul(a, &idempotents[i]) == *a).collect();
        match (l.iter().next(), r.iter().next()) {
            (Some(&u), Some(&v)) => {
                witnesses.insert(a.clone(), (idempotents[u].clone(), idempotents[v].clone()));
            }
            _ => {
                if failure.is_none() {
                    failure = Some(vec![a.clone()]);
                }
            }
        }
        left.push(l);
        right.push(r);
    }
    let has_local_units = failure.is_none();
    let mut has_common_local_units = has_local_units;
    if has_local_units {
        'outer: for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if left[i].is_disjoint(&left[j]) || right[i].is_disjoint(&right[j]) {
                    has_common_local_units = false;
                    failure = Some(vec![elems[i].clone(), elems[j].clone()]);
                    break 'outer;
                }
            }
        }
    }
    LocalUnitsReport { has_local_units, has_common_local_units, witnesses, failure, fragment: !s.is_finite() }
}
