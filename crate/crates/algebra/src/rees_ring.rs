// SPDX-License-Identifier: Apache-2.0

//! Graded Rees matrix rings `M^p_{I,J}(A[S])[ᾱ][β̄]`: finitely supported
//! `I × J` matrices with `a.b = apb`, graded by
//! `B_δ = {(a_ij) : a_ij ∈ A_{α_i δ β_j⁻¹}}`.

use std::collections::{BTreeMap, BTreeSet};

use constructions::{rees_matrix_build, ConstructionError, ReesMatrix, ReesMatrixData, SandwichEntry};
use grade_group::GroupElement;
use grading::FiniteGraded;
use serde::Serialize;

use crate::graded::homogeneous_parts;
use crate::ring::{RingElement, SemigroupRing};
use crate::scalar::Field;
use crate::AlgebraError;

/// Nonzero entries keyed by `(i, j)`.
pub type MatrixElement = BTreeMap<(usize, usize), RingElement<usize>>;

#[derive(Debug, Clone)]
enum Entry {
    Zero,
    One,
    Elem(RingElement<usize>),
}

pub struct ReesRing<'a> {
    pub base: &'a FiniteGraded,
    pub ring: SemigroupRing<'a, FiniteGraded>,
    pub data: ReesMatrixData,
    /// The matching Rees matrix semigroup `E^p_{I,J}(S)[ᾱ][β̄]`.
    pub semigroup: ReesMatrix,
    sandwich: Vec<Vec<Entry>>,
}

/// Validates the sandwich degrees (`p_ji ∈ S_{β_j α_i⁻¹}`) and builds the ring.
pub fn rees_ring_build<'a>(
    base: &'a FiniteGraded,
    field: Field,
    data: &ReesMatrixData,
) -> Result<ReesRing<'a>, AlgebraError> {
    let semigroup = rees_matrix_build(base, data).map_err(|e| match e {
        ConstructionError::SandwichDegreeViolation { j, i, detail } => {
            AlgebraError::SandwichDegreeViolation(format!("p[{j}][{i}]: {detail}"))
        }
        other => AlgebraError::Construction(other),
    })?;
    let ring = SemigroupRing::new(base, field);
    let sandwich = data
        .sandwich
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match e {
                    SandwichEntry::Zero => Entry::Zero,
                    SandwichEntry::One => Entry::One,
                    SandwichEntry::Elem(label) => {
                        let s = base.sg.index_of(label).expect("validated by the semigroup build");
                        let r = ring.basis(s);
                        if r.is_zero() {
                            Entry::Zero
                        } else {
                            Entry::Elem(r)
                        }
                    }
                })
                .collect()
        })
        .collect();
    Ok(ReesRing { base, ring, data: data.clone(), semigroup, sandwich })
}

impl ReesRing<'_> {
    pub fn rows(&self) -> usize {
        self.data.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.data.cols.len()
    }

    /// The matrix with `a` at `(i, j)` and zeros elsewhere.
    pub fn elementary(&self, i: usize, j: usize, a: RingElement<usize>) -> MatrixElement {
        let mut m = MatrixElement::new();
        if !a.is_zero() {
            m.insert((i, j), a);
        }
        m
    }

    pub fn add(&self, x: &MatrixElement, y: &MatrixElement) -> MatrixElement {
        let mut out = x.clone();
        for (pos, b) in y {
            let sum = self.ring.add(out.get(pos).unwrap_or(&RingElement::zero()), b);
            if sum.is_zero() {
                out.remove(pos);
            } else {
                out.insert(*pos, sum);
            }
        }
        out
    }

    /// `x.y = x p y`.
    pub fn mul(&self, x: &MatrixElement, y: &MatrixElement) -> MatrixElement {
        let mut out = MatrixElement::new();
        for (&(i, j), a) in x {
            for (&(k, l), b) in y {
                let middle = match &self.sandwich[j][k] {
                    Entry::Zero => continue,
                    Entry::One => a.clone(),
                    Entry::Elem(p) => self.ring.mul(a, p),
                };
                out = self.add(&out, &self.elementary(i, l, self.ring.mul(&middle, b)));
            }
        }
        out
    }

    /// `δ = α_i⁻¹ γ β_j` for an entry of degree `γ` at `(i, j)`.
    pub fn position_degree(&self, i: usize, j: usize, gamma: &GroupElement) -> GroupElement {
        let g = &self.base.group;
        g.op(&g.op(&g.inv(&self.data.alpha[i]), gamma), &self.data.beta[j])
    }

    /// The decomposition `x = Σ_δ x_δ` with `x_δ ∈ B_δ`.
    pub fn homogeneous_parts(&self, x: &MatrixElement) -> BTreeMap<GroupElement, MatrixElement> {
        let mut out: BTreeMap<GroupElement, MatrixElement> = BTreeMap::new();
        for (&(i, j), a) in x {
            for (gamma, part) in homogeneous_parts(self.base, a) {
                out.entry(self.position_degree(i, j, &gamma)).or_default().insert((i, j), part);
            }
        }
        out
    }

    pub fn render(&self, x: &MatrixElement) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(&(i, j), a)| format!("[{},{}]({})", self.data.rows[i], self.data.cols[j], self.ring.render(a)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReesIsoReport {
    pub field: String,
    /// `|E^p_{I,J}(S) ∖ 0|`.
    pub domain_dim: usize,
    /// `|I|·|J|·|S ∖ 0|`.
    pub target_dim: usize,
    pub pairs_checked: usize,
    pub additive: bool,
    pub multiplicative: bool,
    pub bijective: bool,
    pub graded: bool,
    pub failures: Vec<String>,
}

impl ReesIsoReport {
    pub fn ok(&self) -> bool {
        self.additive && self.multiplicative && self.bijective && self.graded
    }
}

/// `φ(Σ c·e_ij(s)) = Σ c·E_ij(s)`, verified on the elementary-matrix basis.
pub fn rees_ring_iso(r: &ReesRing<'_>) -> ReesIsoReport {
    let rm = &r.semigroup;
    let field = r.ring.field;
    let domain = SemigroupRing::new(&rm.graded, field);
    let phi = |x: &RingElement<usize>| -> MatrixElement {
        x.terms().iter().fold(MatrixElement::new(), |acc, (e, c)| {
            let (i, a, j) = rm.entries[*e].expect("ring support avoids zero");
            r.add(&acc, &r.elementary(i, j, r.ring.term(c.clone(), a)))
        })
    };
    let basis: Vec<usize> = rm.sg().nonzero().collect();
    let images: Vec<MatrixElement> = basis.iter().map(|&e| phi(&domain.basis(e))).collect();
    let label = |e: usize| rm.sg().label(e).to_string();
    let mut failures = Vec::new();

    let distinct: BTreeSet<&MatrixElement> = images.iter().collect();
    let target_dim = r.rows() * r.cols() * r.base.sg.nonzero().count();
    let bijective = distinct.len() == basis.len() && basis.len() == target_dim;

    let mut graded = true;
    for (&e, img) in basis.iter().zip(&images) {
        let parts = r.homogeneous_parts(img);
        let want = rm.graded.deg(e).cloned();
        if parts.len() != 1 || parts.keys().next().cloned() != want {
            graded = false;
            failures.push(format!("φ({}) is not homogeneous of the same degree", label(e)));
        }
    }

    let (mut additive, mut multiplicative, mut pairs) = (true, true, 0);
    for (x, ix) in basis.iter().zip(&images) {
        for (y, iy) in basis.iter().zip(&images) {
            pairs += 1;
            let (bx, by) = (domain.basis(*x), domain.basis(*y));
            if phi(&domain.add(&bx, &by)) != r.add(ix, iy) {
                additive = false;
                failures.push(format!("φ({} + {}) is not additive", label(*x), label(*y)));
            }
            let lhs = phi(&domain.mul(&bx, &by));
            let rhs = r.mul(ix, iy);
            if lhs != rhs {
                multiplicative = false;
                failures.push(format!(
                    "φ({}·{}) = {} but φ·φ = {}",
                    label(*x),
                    label(*y),
                    r.render(&lhs),
                    r.render(&rhs)
                ));
            }
        }
    }
    ReesIsoReport {
        field: field.to_string(),
        domain_dim: basis.len(),
        target_dim,
        pairs_checked: pairs,
        additive,
        multiplicative,
        bijective,
        graded,
        failures,
    }
}
