// SPDX-License-Identifier: Apache-2.0

//! Grading groups.
//!
//! A [`GradeGroup`] is one of the integers, a cyclic group, a finite group
//! given by its Cayley table, or a direct product of these. Elements are plain
//! values ([`GroupElement`]); the group they belong to is passed alongside, and
//! [`GradeGroup::contains`] decides membership.

use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("elements {0} and {1} do not belong to the same group")]
    MixedParents(String, String),
    #[error("element {0} is not a member of {1}")]
    NotAMember(String, String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("cyclic group order must be at least 1")]
    ZeroOrder,
    #[error("cannot parse group description: {0}")]
    Parse(String),
}

/// Multiplication table of a finite group on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
}

impl TableGroup {
    /// Validates the group axioms exhaustively; invalid tables are rejected.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= order) {
                return Err(GroupError::InvalidTable(format!("entry {bad} out of range in row {i}")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupError::InvalidTable("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(order);
        for (a, row) in table.iter().enumerate() {
            let inv = (0..order)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or_else(|| GroupError::InvalidTable(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        Ok(Self { table, inverses, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GradeGroup {
    Integers,
    Cyclic(u64),
    Table(TableGroup),
    Product(Vec<GradeGroup>),
}

/// A group element; its meaning depends on the group it is used with.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Int(i64),
    Residue(u64),
    Index(usize),
    Tuple(Vec<GroupElement>),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Int(v) => write!(f, "{v}"),
            GroupElement::Residue(v) => write!(f, "{v}"),
            GroupElement::Index(v) => write!(f, "g{v}"),
            GroupElement::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupElement::Int(v) => serializer.serialize_i64(*v),
            GroupElement::Residue(v) => serializer.serialize_u64(*v),
            GroupElement::Index(v) => serializer.serialize_u64(*v as u64),
            GroupElement::Tuple(parts) => {
                let mut seq = serializer.serialize_seq(Some(parts.len()))?;
                for p in parts {
                    seq.serialize_element(p)?;
                }
                seq.end()
            }
        }
    }
}

/// Result of [`gg_arith`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arith {
    pub product: GroupElement,
    pub inverse_of_a: GroupElement,
    pub identity: GroupElement,
    pub equal: bool,
}

/// Product, inverse and equality of two elements of `group`, with membership checked.
pub fn gg_arith(group: &GradeGroup, a: &GroupElement, b: &GroupElement) -> Result<Arith, GroupError> {
    match (group.contains(a), group.contains(b)) {
        (true, true) => {
            Ok(Arith { product: group.op(a, b), inverse_of_a: group.inv(a), identity: group.identity(), equal: a == b })
        }
        (false, false) => Err(GroupError::NotAMember(a.to_string(), group.to_string())),
        _ => Err(GroupError::MixedParents(a.to_string(), b.to_string())),
    }
}

/// See [`GradeGroup::enumerate`].
pub fn gg_enumerate(group: &GradeGroup, bound: usize) -> Vec<GroupElement> {
    group.enumerate(bound)
}

impl GradeGroup {
    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            Err(GroupError::ZeroOrder)
        } else {
            Ok(GradeGroup::Cyclic(n))
        }
    }

    pub fn table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        TableGroup::new(table).map(GradeGroup::Table)
    }

    /// The group with one element.
    pub fn trivial() -> Self {
        GradeGroup::Cyclic(1)
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GradeGroup::Integers => GroupElement::Int(0),
            GradeGroup::Cyclic(_) => GroupElement::Residue(0),
            GradeGroup::Table(t) => GroupElement::Index(t.identity),
            GradeGroup::Product(fs) => GroupElement::Tuple(fs.iter().map(|f| f.identity()).collect()),
        }
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        match (self, a) {
            (GradeGroup::Integers, GroupElement::Int(_)) => true,
            (GradeGroup::Cyclic(n), GroupElement::Residue(r)) => r < n,
            (GradeGroup::Table(t), GroupElement::Index(i)) => *i < t.order(),
            (GradeGroup::Product(fs), GroupElement::Tuple(parts)) => {
                fs.len() == parts.len() && fs.iter().zip(parts).all(|(f, p)| f.contains(p))
            }
            _ => false,
        }
    }

    /// Group product `a·b`. Both arguments must be members.
    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GradeGroup::Integers, GroupElement::Int(x), GroupElement::Int(y)) => GroupElement::Int(x + y),
            (GradeGroup::Cyclic(n), GroupElement::Residue(x), GroupElement::Residue(y)) => {
                GroupElement::Residue((x + y) % n)
            }
            (GradeGroup::Table(t), GroupElement::Index(x), GroupElement::Index(y)) => {
                GroupElement::Index(t.table[*x][*y])
            }
            (GradeGroup::Product(fs), GroupElement::Tuple(xs), GroupElement::Tuple(ys)) => {
                GroupElement::Tuple(fs.iter().zip(xs.iter().zip(ys)).map(|(f, (x, y))| f.op(x, y)).collect())
            }
            _ => panic!("group element {a} or {b} does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GradeGroup::Integers, GroupElement::Int(x)) => GroupElement::Int(-x),
            (GradeGroup::Cyclic(n), GroupElement::Residue(x)) => GroupElement::Residue((n - x % n) % n),
            (GradeGroup::Table(t), GroupElement::Index(x)) => GroupElement::Index(t.inverses[*x]),
            (GradeGroup::Product(fs), GroupElement::Tuple(xs)) => {
                GroupElement::Tuple(fs.iter().zip(xs).map(|(f, x)| f.inv(x)).collect())
            }
            _ => panic!("group element {a} does not belong to {self}"),
        }
    }

    /// `a·b⁻¹`
    pub fn div(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.op(a, &self.inv(b))
    }

    /// `a^n` for any integer `n`.
    pub fn pow(&self, a: &GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inv(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.op(&acc, &base);
        }
        acc
    }

    /// Image of an integer under the homomorphism ℤ → Γ sending 1 to the
    /// canonical generator. Defined for `Integers` and `Cyclic` only.
    pub fn from_int(&self, k: i64) -> Option<GroupElement> {
        match self {
            GradeGroup::Integers => Some(GroupElement::Int(k)),
            GradeGroup::Cyclic(n) => Some(GroupElement::Residue(k.rem_euclid(*n as i64) as u64)),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            GradeGroup::Integers => None,
            GradeGroup::Cyclic(n) => Some(*n as usize),
            GradeGroup::Table(t) => Some(t.order()),
            GradeGroup::Product(fs) => fs.iter().try_fold(1usize, |acc, f| f.order().map(|o| acc * o)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Torsion-free abelian: a (possibly empty) product of copies of ℤ.
    pub fn is_torsion_free_abelian(&self) -> bool {
        match self {
            GradeGroup::Integers => true,
            GradeGroup::Cyclic(n) => *n == 1,
            GradeGroup::Table(t) => t.order() == 1,
            GradeGroup::Product(fs) => fs.iter().all(|f| f.is_torsion_free_abelian()),
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            GradeGroup::Integers | GradeGroup::Cyclic(_) => true,
            GradeGroup::Table(t) => {
                let n = t.order();
                (0..n).all(|a| (0..n).all(|b| t.table[a][b] == t.table[b][a]))
            }
            GradeGroup::Product(fs) => fs.iter().all(|f| f.is_abelian()),
        }
    }

    /// Finite groups: the whole carrier. Integers: `[-bound, bound]`.
    /// Products: the product of the component enumerations.
    pub fn enumerate(&self, bound: usize) -> Vec<GroupElement> {
        match self {
            GradeGroup::Integers => {
                let b = bound as i64;
                (-b..=b).map(GroupElement::Int).collect()
            }
            GradeGroup::Cyclic(n) => (0..*n).map(GroupElement::Residue).collect(),
            GradeGroup::Table(t) => (0..t.order()).map(GroupElement::Index).collect(),
            GradeGroup::Product(fs) => {
                let mut acc: Vec<Vec<GroupElement>> = vec![Vec::new()];
                for f in fs {
                    let part = f.enumerate(bound);
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            part.iter().map(move |p| {
                                let mut v = prefix.clone();
                                v.push(p.clone());
                                v
                            })
                        })
                        .collect();
                }
                acc.into_iter().map(GroupElement::Tuple).collect()
            }
        }
    }

    /// Group automorphisms, for finite groups only (brute force over bijections
    /// fixing the identity). Returned as maps indexed like `enumerate(0)`.
    pub fn automorphisms(&self) -> Option<Vec<Vec<GroupElement>>> {
        let elems = self.enumerate(0);
        if !self.is_finite() || elems.len() > 8 {
            return None;
        }
        let index = |g: &GroupElement| elems.iter().position(|x| x == g).expect("member");
        let n = elems.len();
        let mut found = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let hom = (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = index(&self.op(&elems[a], &elems[b]));
                    p[ab] == index(&self.op(&elems[p[a]], &elems[p[b]]))
                })
            });
            if hom {
                found.push(p.iter().map(|&i| elems[i].clone()).collect());
            }
        });
        Some(found)
    }

    /// Parses an element from its JSON encoding (integer, or array for products).
    pub fn parse_element(&self, v: &Value) -> Result<GroupElement, GroupError> {
        let bad = || GroupError::Parse(format!("{v} is not an element of {self}"));
        let el = match self {
            GradeGroup::Integers => GroupElement::Int(v.as_i64().ok_or_else(bad)?),
            GradeGroup::Cyclic(n) => {
                let k = v.as_i64().ok_or_else(bad)?;
                GroupElement::Residue(k.rem_euclid(*n as i64) as u64)
            }
            GradeGroup::Table(_) => GroupElement::Index(v.as_u64().ok_or_else(bad)? as usize),
            GradeGroup::Product(fs) => {
                let parts = v.as_array().ok_or_else(bad)?;
                if parts.len() != fs.len() {
                    return Err(bad());
                }
                GroupElement::Tuple(fs.iter().zip(parts).map(|(f, p)| f.parse_element(p)).collect::<Result<_, _>>()?)
            }
        };
        if self.contains(&el) {
            Ok(el)
        } else {
            Err(bad())
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, GroupError> {
        let kind =
            v.get("type").and_then(Value::as_str).ok_or_else(|| GroupError::Parse("missing key \"type\"".into()))?;
        match kind {
            "Z" => Ok(GradeGroup::Integers),
            "Zn" => {
                let n = v
                    .get("n")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| GroupError::Parse("missing or non-integer key \"n\"".into()))?;
                GradeGroup::cyclic(n)
            }
            "table" => {
                let rows = v
                    .get("table")
                    .and_then(Value::as_array)
                    .ok_or_else(|| GroupError::Parse("missing key \"table\"".into()))?;
                let table = rows
                    .iter()
                    .map(|r| {
                        r.as_array()
                            .ok_or_else(|| GroupError::Parse("key \"table\": rows must be arrays".into()))?
                            .iter()
                            .map(|x| {
                                x.as_u64()
                                    .map(|x| x as usize)
                                    .ok_or_else(|| GroupError::Parse("key \"table\": entries must be naturals".into()))
                            })
                            .collect()
                    })
                    .collect::<Result<Vec<Vec<usize>>, _>>()?;
                GradeGroup::table(table)
            }
            "product" => {
                let factors = v
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| GroupError::Parse("missing key \"factors\"".into()))?;
                Ok(GradeGroup::Product(factors.iter().map(GradeGroup::from_json).collect::<Result<_, _>>()?))
            }
            other => Err(GroupError::Parse(format!("unknown group type {other:?} under key \"type\""))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            GradeGroup::Integers => json!({"type": "Z"}),
            GradeGroup::Cyclic(n) => json!({"type": "Zn", "n": n}),
            GradeGroup::Table(t) => json!({"type": "table", "table": t.table}),
            GradeGroup::Product(fs) => {
                json!({"type": "product", "factors": fs.iter().map(|f| f.to_json()).collect::<Vec<_>>()})
            }
        }
    }
}

fn permutations(perm: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

impl fmt::Display for GradeGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradeGroup::Integers => write!(f, "Z"),
            GradeGroup::Cyclic(n) => write!(f, "Z/{n}"),
            GradeGroup::Table(t) => write!(f, "G[{}]", t.order()),
            GradeGroup::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
        }
    }
}

/// Accepts the JSON description, or the short forms `Z`, `Z/n`, `Zn` and
/// products joined by `x` (for example `Z/2xZ`).
impl FromStr for GradeGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: Value = serde_json::from_str(s).map_err(|e| GroupError::Parse(e.to_string()))?;
            return GradeGroup::from_json(&v);
        }
        let factors: Vec<&str> = s.split('x').collect();
        let parse_one = |f: &str| -> Result<GradeGroup, GroupError> {
            let f = f.trim();
            if f == "Z" {
                return Ok(GradeGroup::Integers);
            }
            let digits =
                f.strip_prefix("Z/").or_else(|| f.strip_prefix('Z')).ok_or_else(|| GroupError::Parse(f.into()))?;
            let n: u64 = digits.parse().map_err(|_| GroupError::Parse(f.into()))?;
            GradeGroup::cyclic(n)
        };
        if factors.len() == 1 {
            parse_one(factors[0])
        } else {
            Ok(GradeGroup::Product(factors.into_iter().map(parse_one).collect::<Result<_, _>>()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_examples() {
        let z = GradeGroup::Integers;
        let r = gg_arith(&z, &GroupElement::Int(2), &GroupElement::Int(3)).unwrap();
        assert_eq!(r.product, GroupElement::Int(5));

        let c3 = GradeGroup::Cyclic(3);
        let r = gg_arith(&c3, &GroupElement::Residue(2), &GroupElement::Residue(2)).unwrap();
        assert_eq!(r.product, GroupElement::Residue(1));

        let c4 = GradeGroup::Cyclic(4);
        let r = gg_arith(&c4, &GroupElement::Residue(1), &GroupElement::Residue(0)).unwrap();
        assert_eq!(r.inverse_of_a, GroupElement::Residue(3));
    }

    #[test]
    fn mixed_parents_rejected() {
        let c3 = GradeGroup::Cyclic(3);
        let err = gg_arith(&c3, &GroupElement::Residue(1), &GroupElement::Int(1)).unwrap_err();
        assert!(matches!(err, GroupError::MixedParents(..)));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(GradeGroup::Cyclic(2).enumerate(0).len(), 2);
        assert_eq!(GradeGroup::Integers.enumerate(2), (-2..=2).map(GroupElement::Int).collect::<Vec<_>>());
        let klein = GradeGroup::Product(vec![GradeGroup::Cyclic(2), GradeGroup::Cyclic(2)]);
        assert_eq!(klein.enumerate(0).len(), 4);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(GradeGroup::table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GradeGroup::table(vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert!(GradeGroup::cyclic(0).is_err());
    }

    #[test]
    fn short_specs() {
        assert_eq!("Z".parse::<GradeGroup>().unwrap(), GradeGroup::Integers);
        assert_eq!("Z/3".parse::<GradeGroup>().unwrap(), GradeGroup::Cyclic(3));
        assert_eq!(
            "Z2xZ".parse::<GradeGroup>().unwrap(),
            GradeGroup::Product(vec![GradeGroup::Cyclic(2), GradeGroup::Integers])
        );
        let g: GradeGroup = r#"{"type":"Zn","n":5}"#.parse().unwrap();
        assert_eq!(g, GradeGroup::Cyclic(5));
    }

    #[test]
    fn automorphisms_of_small_cyclic_groups() {
        assert_eq!(GradeGroup::Cyclic(2).automorphisms().unwrap().len(), 1);
        assert_eq!(GradeGroup::Cyclic(3).automorphisms().unwrap().len(), 2);
        assert_eq!(GradeGroup::Cyclic(5).automorphisms().unwrap().len(), 4);
    }
}
