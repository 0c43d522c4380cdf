// SPDX-License-Identifier: Apache-2.0

//! Gaussian elimination over an exact field, on sparse vectors keyed by basis labels.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

pub type Vector<K> = BTreeMap<K, Scalar>;

/// Row-reduces `rows` and returns the number of independent ones.
pub fn rank<K: Ord + Clone>(field: &Field, rows: &[Vector<K>]) -> usize {
    let mut echelon: Vec<(K, Vector<K>)> = Vec::new();
    for row in rows {
        if let Some(r) = reduce(field, &echelon, row.clone()) {
            push_pivot(field, &mut echelon, r);
        }
    }
    echelon.len()
}

/// Coefficients `c` with `Σ c_i · columns[i] = target`, if any.
pub fn solve<K: Ord + Clone>(field: &Field, columns: &[Vector<K>], target: &Vector<K>) -> Option<Vec<Scalar>> {
    // Augment each column with a tag recording which original columns it combines.
    let n = columns.len();
    let mut echelon: Vec<(K, Vector<K>, Vec<Scalar>)> = Vec::new();
    for (i, col) in columns.iter().enumerate() {
        let mut tag = vec![field.zero(); n];
        tag[i] = field.one();
        let (v, t) = reduce_tagged(field, &echelon, col.clone(), tag);
        if let Some((pivot, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = field.inv(&c).expect("nonzero pivot");
            let v = v.into_iter().map(|(k, x)| (k, field.mul(&x, &inv))).collect();
            let t = t.iter().map(|x| field.mul(x, &inv)).collect();
            echelon.push((pivot, v, t));
        }
    }
    let (rest, tag) = reduce_tagged(field, &echelon, target.clone(), vec![field.zero(); n]);
    if !rest.is_empty() {
        return None;
    }
    // Reduction subtracted Σ c_i·col_i from the target, recording -c_i in the tag.
    Some(tag.iter().map(|x| field.neg(x)).collect())
}

fn reduce_tagged<K: Ord + Clone>(
    field: &Field,
    echelon: &[(K, Vector<K>, Vec<Scalar>)],
    mut v: Vector<K>,
    mut tag: Vec<Scalar>,
) -> (Vector<K>, Vec<Scalar>) {
    for (pivot, row, row_tag) in echelon {
        let Some(c) = v.get(pivot).cloned() else { continue };
        axpy(field, &mut v, &field.neg(&c), row);
        for (t, r) in tag.iter_mut().zip(row_tag) {
            *t = field.sub(t, &field.mul(&c, r));
        }
    }
    (v, tag)
}

fn reduce<K: Ord + Clone>(field: &Field, echelon: &[(K, Vector<K>)], mut v: Vector<K>) -> Option<Vector<K>> {
    for (pivot, row) in echelon {
        if let Some(c) = v.get(pivot).cloned() {
            axpy(field, &mut v, &field.neg(&c), row);
        }
    }
    (!v.is_empty()).then_some(v)
}

fn push_pivot<K: Ord + Clone>(field: &Field, echelon: &mut Vec<(K, Vector<K>)>, v: Vector<K>) {
    let (pivot, c) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())).expect("nonzero");
    let inv = field.inv(&c).expect("nonzero pivot");
    echelon.push((pivot, v.into_iter().map(|(k, x)| (k, field.mul(&x, &inv))).collect()));
}

/// `v += a·w`, dropping zeros.
pub fn axpy<K: Ord + Clone>(field: &Field, v: &mut Vector<K>, a: &Scalar, w: &Vector<K>) {
    for (k, x) in w {
        let next = field.add(v.get(k).unwrap_or(&field.zero()), &field.mul(a, x));
        if field.is_zero(&next) {
            v.remove(k);
        } else {
            v.insert(k.clone(), next);
        }
    }
}
