// SPDX-License-Identifier: Apache-2.0

//! Graded Rees matrix semigroups `E^p_{I,J}(S)[ᾱ][β̄]` over a finite graded `S`.
//!
//! Elements are elementary matrices `e_ij(a)`, with `e_ij(a)·e_kl(b) = e_il(a·p_jk·b)`.
//! `e_ij(a)` lies in degree `δ = α_i⁻¹·deg(a)·β_j`, i.e. `a ∈ S_{α_i δ β_j⁻¹}`.

use std::collections::HashMap;

use grade_group::{GradeGroup, GroupElement};
use grading::FiniteGraded;
use semigroup_core::FiniteSemigroup;
use serde_json::Value;

use crate::ConstructionError;

/// An entry of the sandwich matrix, an element of `S¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SandwichEntry {
    Zero,
    /// The adjoined identity of `S¹`.
    One,
    /// An element of `S`, by label.
    Elem(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesMatrixData {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub alpha: Vec<GroupElement>,
    pub beta: Vec<GroupElement>,
    /// `sandwich[j][i]` is `p_ji`, a `J × I` matrix.
    pub sandwich: Vec<Vec<SandwichEntry>>,
}

fn index_set(v: Option<&Value>, key: &str) -> Result<Vec<String>, ConstructionError> {
    match v {
        Some(Value::Number(n)) => {
            let k = n.as_u64().ok_or_else(|| ConstructionError::Data(format!("\"{key}\" must be a count")))?;
            Ok((1..=k).map(|i| i.to_string()).collect())
        }
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                other => Ok(other.to_string()),
            })
            .collect(),
        _ => Err(ConstructionError::Data(format!("missing \"{key}\""))),
    }
}

impl ReesMatrixData {
    /// Parses `{"I", "J", "alpha", "beta", "sandwich"}`. `I` and `J` are counts
    /// or name lists. Sandwich entries: `0` or `null` for zero, `1` for the
    /// adjoined identity, a string for an element label of `S`.
    pub fn from_json(v: &Value, group: &GradeGroup) -> Result<Self, ConstructionError> {
        let rows = index_set(v.get("I"), "I")?;
        let cols = index_set(v.get("J"), "J")?;
        let degrees = |key: &str, len: usize| -> Result<Vec<GroupElement>, ConstructionError> {
            match v.get(key) {
                None => Ok(vec![group.identity(); len]),
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|x| group.parse_element(x).map_err(|e| ConstructionError::Data(format!("\"{key}\": {e}"))))
                    .collect(),
                Some(_) => Err(ConstructionError::Data(format!("\"{key}\" must be an array"))),
            }
        };
        let alpha = degrees("alpha", rows.len())?;
        let beta = degrees("beta", cols.len())?;
        let sandwich = v
            .get("sandwich")
            .and_then(Value::as_array)
            .ok_or_else(|| ConstructionError::Data("missing \"sandwich\"".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| ConstructionError::Data("sandwich rows must be arrays".into()))?
                    .iter()
                    .map(|x| match x {
                        Value::Null => Ok(SandwichEntry::Zero),
                        Value::Number(n) if n.as_u64() == Some(0) => Ok(SandwichEntry::Zero),
                        Value::Number(n) if n.as_u64() == Some(1) => Ok(SandwichEntry::One),
                        Value::String(s) => Ok(SandwichEntry::Elem(s.clone())),
                        other => Err(ConstructionError::Data(format!("bad sandwich entry {other}"))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        Ok(Self { rows, cols, alpha, beta, sandwich })
    }
}

/// The materialized semigroup. Index 0 is zero; every other index is some `e_ij(a)`.
#[derive(Debug, Clone)]
pub struct ReesMatrix {
    pub graded: FiniteGraded,
    /// `(i, a, j)` for each nonzero index, `a` an index into `S`.
    pub entries: Vec<Option<(usize, usize, usize)>>,
}

impl ReesMatrix {
    pub fn index_of(&self, i: usize, a: usize, j: usize) -> Option<usize> {
        self.entries.iter().position(|e| *e == Some((i, a, j)))
    }

    pub fn sg(&self) -> &FiniteSemigroup {
        &self.graded.sg
    }
}

enum Resolved {
    Zero,
    One,
    Elem(usize),
}

pub fn rees_matrix_build(s: &FiniteGraded, data: &ReesMatrixData) -> Result<ReesMatrix, ConstructionError> {
    let (ni, nj) = (data.rows.len(), data.cols.len());
    if data.alpha.len() != ni || data.beta.len() != nj {
        return Err(ConstructionError::Data("alpha/beta lengths must match I/J".into()));
    }
    if data.sandwich.len() != nj || data.sandwich.iter().any(|r| r.len() != ni) {
        return Err(ConstructionError::Data(format!("sandwich must be {nj}×{ni} (J × I)")));
    }
    let group = &s.group;
    if let Some(bad) = data.alpha.iter().chain(&data.beta).find(|g| !group.contains(g)) {
        return Err(ConstructionError::Data(format!("{bad} is not in the grading group")));
    }
    let sg = &s.sg;
    let zero = sg.zero_index();

    let mut p = Vec::with_capacity(nj);
    for (j, row) in data.sandwich.iter().enumerate() {
        let mut out = Vec::with_capacity(ni);
        for (i, entry) in row.iter().enumerate() {
            let required = group.div(&data.beta[j], &data.alpha[i]);
            let violation = |detail: String| ConstructionError::SandwichDegreeViolation {
                j: data.cols[j].clone(),
                i: data.rows[i].clone(),
                detail,
            };
            out.push(match entry {
                SandwichEntry::Zero => Resolved::Zero,
                SandwichEntry::One => {
                    if !group.is_identity(&required) {
                        return Err(violation(format!("identity entry needs β_jα_i⁻¹ = ε, got {required}")));
                    }
                    Resolved::One
                }
                SandwichEntry::Elem(label) => {
                    let a =
                        sg.index_of(label).ok_or_else(|| ConstructionError::Data(format!("unknown label {label}")))?;
                    if a == zero {
                        Resolved::Zero
                    } else if s.deg(a) != Some(&required) {
                        let got = s.deg(a).map(ToString::to_string).unwrap_or_default();
                        return Err(violation(format!("deg({label}) = {got}, need {required}")));
                    } else {
                        Resolved::Elem(a)
                    }
                }
            });
        }
        p.push(out);
    }

    let mut entries = vec![None];
    let mut labels = vec!["0".to_string()];
    for i in 0..ni {
        for j in 0..nj {
            for a in sg.nonzero() {
                entries.push(Some((i, a, j)));
                labels.push(format!("e_{{{},{}}}({})", data.rows[i], data.cols[j], sg.label(a)));
            }
        }
    }
    let position: HashMap<(usize, usize, usize), usize> =
        entries.iter().enumerate().filter_map(|(x, e)| Some(((*e)?, x))).collect();
    let lookup = |i: usize, a: usize, j: usize| -> usize {
        if a == zero {
            return 0;
        }
        position[&(i, a, j)]
    };
    let table_mul = |x: usize, y: usize| -> usize {
        let (Some((i, a, j)), Some((k, b, l))) = (entries[x], entries[y]) else { return 0 };
        let c = match p[j][k] {
            Resolved::Zero => zero,
            Resolved::One => sg.m(a, b),
            Resolved::Elem(q) => sg.m(sg.m(a, q), b),
        };
        lookup(i, c, l)
    };
    let table = FiniteSemigroup::from_fn(labels, 0, table_mul).map_err(|e| ConstructionError::Data(e.to_string()))?;
    let degrees = entries
        .iter()
        .map(|e| {
            let (i, a, j) = (*e)?;
            let d = s.deg(a)?;
            Some(group.op(&group.op(&group.inv(&data.alpha[i]), d), &data.beta[j]))
        })
        .collect();
    let graded = FiniteGraded::new(table, group.clone(), degrees)?;
    Ok(ReesMatrix { graded, entries })
}
