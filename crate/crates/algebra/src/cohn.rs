// SPDX-License-Identifier: Apache-2.0

//! Cohn path algebras `C_K(E) = K[𝒮(E)]` with their natural ℤ- and ℤ/n-gradings.
//!
//! The ring-side verdicts reuse the semigroup verdicts (the induced grading on
//! `K[S]` is strong iff the grading on `S` is). ℤ/n `Holds` verdicts are
//! corroborated by exhibiting, for each basis element `t = xy⁻¹` in a bounded
//! fragment and each degree `α`, homogeneous factors whose ring product is `t`.

use gis::{gis_enumerate, natural_grading_verdicts, strong_mod_n_verdict, zn_factorization, GisBackend, GisElement};
use gis::{GisGrading, GradedGis};
use grade_group::GroupElement;
use grading::{Bounds, GradedSemigroup, Verdict};
use graphs::{Graph, Path};
use serde::Serialize;

use crate::ring::SemigroupRing;
use crate::scalar::Field;
use crate::AlgebraError;

#[derive(Debug, Clone, Serialize)]
pub struct Corroboration {
    pub modulus: u64,
    /// Pairs (basis element, degree) examined.
    pub checked: usize,
    pub factored: usize,
    /// First pairs with no factorization found, rendered.
    pub missing: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohnReport {
    pub field: String,
    pub size_bound: usize,
    /// Basis elements of `C_K(E)` in the fragment (nonzero elements of `𝒮(E)`).
    pub fragment_dim: usize,
    /// `e·e⁻¹ + e⁻¹·e = ee⁻¹ + r(e)` for every edge.
    pub edge_identities: bool,
    /// Associativity on all basis triples of size at most 2.
    pub associative: bool,
    pub strong_z: Verdict,
    pub strong_mod_n: Vec<(u64, Verdict)>,
    pub corroboration: Vec<Corroboration>,
}

impl CohnReport {
    /// Every ℤ/n `Holds` is backed by a complete bounded factorization.
    pub fn corroborated(&self) -> bool {
        self.strong_mod_n.iter().zip(&self.corroboration).all(|((_, v), c)| !v.is_holds() || c.missing.is_empty())
    }
}

pub fn cohn_algebra(g: &Graph, field: Field, size_bound: usize, moduli: &[u64]) -> Result<CohnReport, AlgebraError> {
    let b = GisBackend::new(g.clone());
    let ring = SemigroupRing::new(&b, field);
    let fragment: Vec<GisElement> =
        gis_enumerate(&b, size_bound).into_iter().filter(|a| *a != GisElement::Zero).collect();

    let edge_identities = (0..g.edge_count()).all(|e| {
        let path = g.path(g.edge(e).src, vec![e]).expect("an edge is a path");
        let (x, xi) = (ring.basis(GisElement::path(path.clone())), ring.basis(GisElement::path_inverse(path.clone())));
        let lhs = ring.add(&ring.mul(&x, &xi), &ring.mul(&xi, &x));
        let rhs = ring.add(&ring.mul(&x, &xi), &ring.basis(GisElement::vertex(path.range())));
        lhs == rhs
    });

    let small: Vec<_> = fragment.iter().filter(|a| a.size() <= 2).map(|a| ring.basis(a.clone())).collect();
    let associative = small.iter().all(|x| {
        small.iter().all(|y| {
            let xy = ring.mul(x, y);
            small.iter().all(|z| ring.mul(&xy, z) == ring.mul(x, &ring.mul(y, z)))
        })
    });

    let bounds = Bounds::default();
    let verdicts = natural_grading_verdicts(&b, &[], bounds)?;
    let mut strong_mod_n = Vec::new();
    let mut corroboration = Vec::new();
    for &n in moduli {
        let (v, _) = strong_mod_n_verdict(&b, n, bounds)?;
        let v = Verdict { certificate: format!("C_K(E) with the induced ℤ/{n}-grading: {}", v.certificate), ..v };
        strong_mod_n.push((n, v));
        corroboration.push(corroborate(&b, &ring, &fragment, n)?);
    }
    Ok(CohnReport {
        field: field.to_string(),
        size_bound,
        fragment_dim: fragment.len(),
        edge_identities,
        associative,
        strong_z: verdicts.cohn_strong,
        strong_mod_n,
        corroboration,
    })
}

fn corroborate(
    b: &GisBackend,
    ring: &SemigroupRing<'_, GisBackend>,
    fragment: &[GisElement],
    n: u64,
) -> Result<Corroboration, AlgebraError> {
    let graded = GradedGis::new(b.clone(), GisGrading::Mod(n))?;
    let group = graded.group().clone();
    let g = b.graph();
    let (mut checked, mut factored, mut missing) = (0, 0, Vec::new());
    for t in fragment {
        let GisElement::Pair(x, y) = t else { continue };
        let deg_t = graded.degree(t).expect("nonzero");
        for k in 0..n {
            let alpha = GroupElement::Residue(k);
            checked += 1;
            match factor(g, x, y, &alpha, n) {
                Some((u, w))
                    if graded.degree(&u).as_ref() == Some(&alpha)
                        && graded.degree(&w) == Some(group.div(&deg_t, &alpha))
                        && ring.mul(&ring.basis(u.clone()), &ring.basis(w.clone())) == ring.basis(t.clone()) =>
                {
                    factored += 1;
                }
                _ if missing.len() < 5 => missing.push(format!("{} in degree {alpha}", b.render(t))),
                _ => {}
            }
        }
    }
    Ok(Corroboration { modulus: n, checked, factored, missing })
}

/// `xy⁻¹ = (xz⁻¹)(zy⁻¹)` with `|x| − |z| ≡ α (mod n)` and `r(z) = r(x)`.
fn factor(g: &Graph, x: &Path, y: &Path, alpha: &GroupElement, n: u64) -> Option<(GisElement, GisElement)> {
    let GroupElement::Residue(a) = alpha else { return None };
    let n = n as i64;
    let extra = (x.len() as i64 - y.len() as i64 - *a as i64).rem_euclid(n) as usize;
    let z = zn_factorization(g, x, y, extra)?;
    let u = GisElement::pair(x.clone(), z.clone()).ok()?;
    let w = GisElement::pair(z, y.clone()).ok()?;
    Some((u, w))
}
