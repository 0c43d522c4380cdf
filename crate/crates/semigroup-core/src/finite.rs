// SPDX-License-Identifier: Apache-2.0

//! Cayley-table semigroups.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::{Semigroup, SemigroupError};

/// A finite semigroup on `0..order` with a distinguished zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    table: Vec<Vec<usize>>,
    zero: usize,
    labels: Vec<String>,
    inverses: Option<Vec<usize>>,
}

impl FiniteSemigroup {
    /// Validates closure, absorption of zero and associativity exhaustively.
    pub fn new(table: Vec<Vec<usize>>, zero: usize, labels: Option<Vec<String>>) -> Result<Self, SemigroupError> {
        let order = table.len();
        if order == 0 {
            return Err(SemigroupError::Shape("empty table".into()));
        }
        if zero >= order {
            return Err(SemigroupError::Shape(format!("zero index {zero} out of range")));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(SemigroupError::Shape(format!("row {i} has length {}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= order) {
                return Err(SemigroupError::Shape(format!("entry {bad} out of range in row {i}")));
            }
        }
        let labels = labels.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        if labels.len() != order {
            return Err(SemigroupError::Shape("label count differs from order".into()));
        }
        for a in 0..order {
            if table[a][zero] != zero || table[zero][a] != zero {
                return Err(SemigroupError::ZeroNotAbsorbing(labels[a].clone()));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(SemigroupError::NotAssociative(
                            labels[a].clone(),
                            labels[b].clone(),
                            labels[c].clone(),
                        ));
                    }
                }
            }
        }
        let mut s = Self { table, zero, labels, inverses: None };
        s.inverses = s.compute_inverses();
        Ok(s)
    }

    /// Builds the table from a multiplication function on indices.
    pub fn from_fn(
        labels: Vec<String>,
        zero: usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, SemigroupError> {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::new(table, zero, Some(labels))
    }

    fn compute_inverses(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut inv = Vec::with_capacity(n);
        for s in 0..n {
            let mut found = None;
            for t in 0..n {
                if self.m(self.m(s, t), s) == s && self.m(self.m(t, s), t) == t {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(t);
                }
            }
            inv.push(found?);
        }
        Some(inv)
    }

    #[inline]
    pub fn m(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&a| a != self.zero)
    }

    pub fn is_inverse(&self) -> bool {
        self.inverses.is_some()
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        self.inverses.as_ref().map(|v| v[a])
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.m(a, a) == a).collect()
    }

    /// The subsemigroup on `elems` (which must contain zero and be closed),
    /// together with the embedding of new indices into old ones.
    pub fn restrict(&self, elems: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>), SemigroupError> {
        let mut keep: Vec<usize> = elems.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let zero =
            *pos.get(&self.zero).ok_or_else(|| SemigroupError::NotClosed("subset does not contain zero".into()))?;
        let mut table = Vec::with_capacity(keep.len());
        for &a in &keep {
            let mut row = Vec::with_capacity(keep.len());
            for &b in &keep {
                let ab = self.m(a, b);
                row.push(*pos.get(&ab).ok_or_else(|| {
                    SemigroupError::NotClosed(format!("{} * {} = {}", self.labels[a], self.labels[b], self.labels[ab]))
                })?);
            }
            table.push(row);
        }
        let labels = keep.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((FiniteSemigroup::new(table, zero, Some(labels))?, keep))
    }

    pub fn from_json(v: &Value) -> Result<Self, SemigroupError> {
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| SemigroupError::Parse("missing or non-integer key \"order\"".into()))?
            as usize;
        let zero = v
            .get("zero")
            .and_then(Value::as_u64)
            .ok_or_else(|| SemigroupError::Parse("missing or non-integer key \"zero\"".into()))?
            as usize;
        let rows = v
            .get("table")
            .and_then(Value::as_array)
            .ok_or_else(|| SemigroupError::Parse("missing key \"table\"".into()))?;
        let table = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| SemigroupError::Parse("key \"table\": rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| SemigroupError::Parse("key \"table\": entries must be naturals".into()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        if table.len() != order {
            return Err(SemigroupError::Parse(format!(
                "key \"order\" is {order} but \"table\" has {} rows",
                table.len()
            )));
        }
        let labels = match v.get("labels") {
            None => None,
            Some(l) => Some(
                l.as_array()
                    .ok_or_else(|| SemigroupError::Parse("key \"labels\" must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .map(str::to_owned)
                            .ok_or_else(|| SemigroupError::Parse("key \"labels\": entries must be strings".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        FiniteSemigroup::new(table, zero, labels)
    }

    pub fn to_json(&self) -> Value {
        json!({"order": self.order(), "zero": self.zero, "table": self.table, "labels": self.labels})
    }
}

impl Semigroup for FiniteSemigroup {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }
    fn enumerate(&self, _bound: usize) -> Vec<usize> {
        (0..self.order()).collect()
    }
    fn is_finite(&self) -> bool {
        true
    }
    fn inverse(&self, a: &usize) -> Option<usize> {
        self.inv(*a)
    }
    fn render(&self, a: &usize) -> String {
        self.labels[*a].clone()
    }
}

/// Tabulates the fragment `enumerate(bound)` of any backend. Fails if the
/// fragment is not closed under multiplication. Index `i` of the result
/// corresponds to `elements[i]`.
pub fn materialize<S: Semigroup>(s: &S, bound: usize) -> Result<(FiniteSemigroup, Vec<S::Elem>), SemigroupError> {
    let mut elements = s.enumerate(bound);
    let zero = s.zero();
    if !elements.contains(&zero) {
        elements.insert(0, zero.clone());
    }
    let index: HashMap<S::Elem, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut table = Vec::with_capacity(elements.len());
    for a in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in &elements {
            let ab = s.mul(a, b);
            row.push(*index.get(&ab).ok_or_else(|| {
                SemigroupError::NotClosed(format!("{} * {} = {}", s.render(a), s.render(b), s.render(&ab)))
            })?);
        }
        table.push(row);
    }
    let labels = elements.iter().map(|e| s.render(e)).collect();
    let fs = FiniteSemigroup::new(table, index[&zero], Some(labels))?;
    Ok((fs, elements))
}

/// S¹: the semigroup with a fresh identity appended as the last index.
pub fn adjoin_identity(s: &FiniteSemigroup) -> FiniteSemigroup {
    let n = s.order();
    let mut labels = s.labels().to_vec();
    let one_label = if labels.iter().any(|l| l == "1") { "1'".to_string() } else { "1".to_string() };
    labels.push(one_label);
    FiniteSemigroup::from_fn(labels, s.zero_index(), |a, b| {
        if a == n {
            b
        } else if b == n {
            a
        } else {
            s.m(a, b)
        }
    })
    .expect("adjoining an identity preserves associativity")
}
