// SPDX-License-Identifier: Apache-2.0

//! Theorem-backed grading verdicts for `𝒮(E)`, each compared with the
//! generic bounded checks of the grading crate.
//!
//! A `Fails` here always comes with a structural certificate (nonempty graph,
//! a source, a difference that no pair of paths realizes); exhausting a
//! search never produces one.

use grading::{
    is_locally_strongly_graded, is_saturated_strongly_graded, is_strongly_graded, product_coverage, Bounds, Status,
    Verdict,
};
use graphs::{condition_y_exact, locally_strong_condition, Graph, Path};
use serde::Serialize;

use crate::{GisBackend, GisError, GisGrading, GradedGis};

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub property: String,
    pub theorem: Status,
    pub generic: Verdict,
    /// The generic check neither fails a theorem `Holds` nor exactly holds
    /// where the theorem fails.
    pub consistent: bool,
}

impl CrossCheck {
    fn new(property: impl Into<String>, theorem: &Verdict, generic: Verdict) -> Self {
        let consistent =
            !(theorem.is_holds() && generic.is_fails()) && !(theorem.is_fails() && generic.is_holds() && generic.exact);
        Self { property: property.into(), theorem: theorem.status, generic, consistent }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GisVerdicts {
    pub strong_z: Verdict,
    pub strong_mod_n: Vec<(u64, Verdict)>,
    pub locally_strong_z: Verdict,
    pub saturated_z: Verdict,
    pub cohn_strong: Verdict,
    pub cross_checks: Vec<CrossCheck>,
}

impl GisVerdicts {
    pub fn consistent(&self) -> bool {
        self.cross_checks.iter().all(|c| c.consistent)
    }
}

fn strong_z(g: &Graph) -> Verdict {
    if g.is_empty() {
        return Verdict::holds("E is empty, so 𝒮(E) = {0}");
    }
    let v = g.vertex_name(0).to_string();
    Verdict::fails(
        format!("nonempty graph: every s ∈ S_1 has ss⁻¹ = xx⁻¹ with |x| ≥ 1, so the vertex {v} ∉ S_1·S_-1"),
        vec![v, "1".into(), "-1".into()],
    )
}

/// The ℤ/n-grading verdict with its cross-checks.
pub fn strong_mod_n_verdict(b: &GisBackend, n: u64, bounds: Bounds) -> Result<(Verdict, Vec<CrossCheck>), GisError> {
    let graded = GradedGis::new(b.clone(), GisGrading::Mod(n))?;
    let g = b.graph();
    let theorem = if g.is_empty() {
        Verdict::holds("E is empty, so 𝒮(E) = {0}")
    } else if n == 1 {
        Verdict::holds("trivial group: S·S = S holds in every inverse semigroup")
    } else if let Some(u) = (0..g.vertex_count()).find(|&u| g.is_source(u)) {
        let name = g.vertex_name(u).to_string();
        Verdict::fails(
            format!(
                "{name} is a source, so no s of degree 1 has ss⁻¹ = {name}; strong gradings of 𝒮(E) are then trivial"
            ),
            vec![name, "1".into()],
        )
    } else {
        Verdict::holds("nonempty with no sources: xy⁻¹ = (xz⁻¹)(zy⁻¹) with r(z) = r(x), |z| = |y| + b")
    };
    let label = format!("strong ℤ/{n}");
    let checks = vec![
        CrossCheck::new(label.clone(), &theorem, is_strongly_graded(&graded, bounds)),
        CrossCheck::new(format!("{label} product coverage"), &theorem, product_coverage(&graded, bounds)),
    ];
    Ok((theorem, checks))
}

/// A path `z` with `r(z) = r(x)` and `|z| = |y| + b`: the factor of
/// `xy⁻¹ = (xz⁻¹)(zy⁻¹)` in the ℤ/n lemma. Exists whenever `E` has no sources.
pub fn zn_factorization(g: &Graph, x: &Path, y: &Path, b: usize) -> Option<Path> {
    let len = y.len() + b;
    // ends[m][v]: some path of length m ends at v.
    let mut ends = vec![vec![true; g.vertex_count()]];
    for m in 1..=len {
        let row = (0..g.vertex_count()).map(|v| g.in_edges(v).iter().any(|&e| ends[m - 1][g.edge(e).src])).collect();
        ends.push(row);
    }
    if !ends[len][x.range()] {
        return None;
    }
    let mut reversed = Vec::with_capacity(len);
    let mut at = x.range();
    for m in (1..=len).rev() {
        let e = *g.in_edges(at).iter().find(|&&e| ends[m - 1][g.edge(e).src]).expect("table says a path exists");
        reversed.push(e);
        at = g.edge(e).src;
    }
    reversed.reverse();
    g.path(at, reversed).ok()
}

pub fn natural_grading_verdicts(b: &GisBackend, moduli: &[u64], bounds: Bounds) -> Result<GisVerdicts, GisError> {
    let g = b.graph();
    let natural = GradedGis::natural(b.clone());
    let mut cross_checks = Vec::new();

    let strong = strong_z(g);
    cross_checks.push(CrossCheck::new("strong ℤ", &strong, is_strongly_graded(&natural, bounds)));

    let local = locally_strong_condition(g);
    let generic_local =
        is_locally_strongly_graded(&natural, bounds).unwrap_or_else(|e| Verdict::unknown(e.to_string()));
    cross_checks.push(CrossCheck::new("locally strong ℤ", &local, generic_local));

    let saturated = condition_y_exact(g);
    let generic_saturated =
        is_saturated_strongly_graded(&natural, bounds).unwrap_or_else(|e| Verdict::unknown(e.to_string()));
    cross_checks.push(CrossCheck::new("saturated ℤ", &saturated, generic_saturated));

    let cohn = Verdict {
        certificate: format!("C_K(E) = K[𝒮(E)] carries the induced grading: {}", strong.certificate),
        ..strong.clone()
    };

    let mut strong_mod_n = Vec::new();
    for &n in moduli {
        let (v, checks) = strong_mod_n_verdict(b, n, bounds)?;
        strong_mod_n.push((n, v));
        cross_checks.extend(checks);
    }
    Ok(GisVerdicts {
        strong_z: strong,
        strong_mod_n,
        locally_strong_z: local,
        saturated_z: saturated,
        cohn_strong: cohn,
        cross_checks,
    })
}
