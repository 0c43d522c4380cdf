// SPDX-License-Identifier: Apache-2.0

//! Contracted semigroup rings `A[S]`: finitely supported sums of nonzero
//! semigroup elements, with the semigroup zero identified with `0 ∈ A[S]`.

use std::collections::BTreeMap;

use semigroup_core::Semigroup;
use serde::Serialize;
use serde_json::{json, Value};

use crate::linalg::{axpy, Vector};
use crate::scalar::{Field, Scalar};

/// `Σ a^(s) s` with nonzero coefficients only; never contains the semigroup zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement<E: Ord> {
    terms: BTreeMap<E, Scalar>,
}

impl<E: Ord + Clone> RingElement<E> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<E, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, s: &E) -> Option<&Scalar> {
        self.terms.get(s)
    }

    pub fn support(&self) -> impl Iterator<Item = &E> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_vector(&self) -> &Vector<E> {
        &self.terms
    }

    pub(crate) fn from_vector(terms: Vector<E>) -> Self {
        Self { terms }
    }
}

/// `A[S]` over an exact field.
#[derive(Debug, Clone, Copy)]
pub struct SemigroupRing<'a, S> {
    pub sg: &'a S,
    pub field: Field,
}

impl<'a, S: Semigroup> SemigroupRing<'a, S> {
    pub fn new(sg: &'a S, field: Field) -> Self {
        Self { sg, field }
    }

    pub fn zero(&self) -> RingElement<S::Elem> {
        RingElement::zero()
    }

    /// `a·s`; collapses to `0` when `s` is the semigroup zero or `a = 0`.
    pub fn term(&self, a: Scalar, s: S::Elem) -> RingElement<S::Elem> {
        let mut out = RingElement::zero();
        if !self.sg.is_zero(&s) && !self.field.is_zero(&a) {
            out.terms.insert(s, a);
        }
        out
    }

    /// `1·s`.
    pub fn basis(&self, s: S::Elem) -> RingElement<S::Elem> {
        self.term(self.field.one(), s)
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (i64, S::Elem)>) -> RingElement<S::Elem> {
        terms.into_iter().fold(self.zero(), |acc, (k, s)| self.add(&acc, &self.term(self.field.from_int(k), s)))
    }

    pub fn add(&self, a: &RingElement<S::Elem>, b: &RingElement<S::Elem>) -> RingElement<S::Elem> {
        let mut terms = a.terms.clone();
        axpy(&self.field, &mut terms, &self.field.one(), &b.terms);
        RingElement { terms }
    }

    pub fn scale(&self, k: &Scalar, a: &RingElement<S::Elem>) -> RingElement<S::Elem> {
        let mut terms = BTreeMap::new();
        axpy(&self.field, &mut terms, k, &a.terms);
        RingElement { terms }
    }

    pub fn neg(&self, a: &RingElement<S::Elem>) -> RingElement<S::Elem> {
        self.scale(&self.field.from_int(-1), a)
    }

    pub fn sub(&self, a: &RingElement<S::Elem>, b: &RingElement<S::Elem>) -> RingElement<S::Elem> {
        self.add(a, &self.neg(b))
    }

    /// Convolution; terms whose semigroup product is zero vanish.
    pub fn mul(&self, a: &RingElement<S::Elem>, b: &RingElement<S::Elem>) -> RingElement<S::Elem> {
        let f = &self.field;
        let mut terms: Vector<S::Elem> = BTreeMap::new();
        for (s, x) in &a.terms {
            for (t, y) in &b.terms {
                let st = self.sg.mul(s, t);
                if self.sg.is_zero(&st) {
                    continue;
                }
                let next = f.add(terms.get(&st).unwrap_or(&f.zero()), &f.mul(x, y));
                if f.is_zero(&next) {
                    terms.remove(&st);
                } else {
                    terms.insert(st, next);
                }
            }
        }
        RingElement { terms }
    }

    pub fn render(&self, a: &RingElement<S::Elem>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (s, c)) in a.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", self.field.neg(c)) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "-") => out.push('-'),
                (0, _) => {}
                _ => out.push_str(&format!(" {sign} ")),
            }
            let name = self.sg.render(s);
            if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}·{name}"));
            }
        }
        out
    }

    /// `[[element, num, den], ...]` over Q, `[[element, residue], ...]` over F_p.
    pub fn to_json(&self, a: &RingElement<S::Elem>) -> Value {
        Value::Array(
            a.terms
                .iter()
                .map(|(s, c)| {
                    let mut row = vec![json!(self.sg.render(s))];
                    row.extend(self.field.to_json(c));
                    Value::Array(row)
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Arith {
    pub sum: Value,
    pub product: Value,
    pub sum_text: String,
    pub product_text: String,
}

pub fn ring_arith<S: Semigroup>(
    ring: &SemigroupRing<'_, S>,
    a: &RingElement<S::Elem>,
    b: &RingElement<S::Elem>,
) -> Arith {
    let (sum, product) = (ring.add(a, b), ring.mul(a, b));
    Arith {
        sum: ring.to_json(&sum),
        product: ring.to_json(&product),
        sum_text: ring.render(&sum),
        product_text: ring.render(&product),
    }
}
