// SPDX-License-Identifier: Apache-2.0

//! Graph inverse semigroups `𝒮(E)`.
//!
//! Every nonzero element has a unique normal form `xy⁻¹` with `x, y` paths
//! and `r(x) = r(y)`, so elements are stored as that pair and multiplied by
//! prefix comparison.

use std::collections::BTreeMap;

use graphs::{enumerate_paths, Graph, Path};
use semigroup_core::Semigroup;

pub mod gradings;
pub mod order;
pub mod verdicts;

pub use gradings::{gis_inverse_and_degree, GisGrading, GradedGis, InverseAndDegree};
pub use order::{idempotent_order_report, IdempotentOrderReport};
pub use verdicts::{natural_grading_verdicts, strong_mod_n_verdict, zn_factorization, CrossCheck, GisVerdicts};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GisError {
    #[error("zero has no degree")]
    ZeroElement,
    #[error("paths end at different vertices")]
    RangeMismatch,
    #[error("ℤ/0 is not a finite cyclic grading; use the natural grading")]
    ZeroModulus,
    #[error(transparent)]
    Graph(#[from] graphs::GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GisElement {
    Zero,
    /// `xy⁻¹`.
    Pair(Path, Path),
}

impl GisElement {
    pub fn pair(x: Path, y: Path) -> Result<Self, GisError> {
        if x.range() != y.range() {
            return Err(GisError::RangeMismatch);
        }
        Ok(Self::Pair(x, y))
    }

    pub fn vertex(v: usize) -> Self {
        Self::Pair(Path::vertex(v), Path::vertex(v))
    }

    /// The path `x` as the element `x·r(x)⁻¹`.
    pub fn path(x: Path) -> Self {
        let end = Path::vertex(x.range());
        Self::Pair(x, end)
    }

    /// `y⁻¹` as the element `r(y)·y⁻¹`.
    pub fn path_inverse(y: Path) -> Self {
        let end = Path::vertex(y.range());
        Self::Pair(end, y)
    }

    pub fn size(&self) -> usize {
        match self {
            Self::Zero => 0,
            Self::Pair(x, y) => x.len() + y.len(),
        }
    }

    /// `(xy⁻¹)⁻¹ = yx⁻¹`.
    pub fn inverse(&self) -> Self {
        match self {
            Self::Zero => Self::Zero,
            Self::Pair(x, y) => Self::Pair(y.clone(), x.clone()),
        }
    }
}

/// `(xy⁻¹)(uv⁻¹)`: `(xz)v⁻¹` if `u = yz`, `x(vw)⁻¹` if `y = uw`, else zero.
pub fn gis_mul(a: &GisElement, b: &GisElement) -> GisElement {
    let (GisElement::Pair(x, y), GisElement::Pair(u, v)) = (a, b) else {
        return GisElement::Zero;
    };
    if let Some(z) = u.strip_prefix(y) {
        let xz = x.concat(&z).expect("r(x) = r(y) = s(z)");
        return GisElement::Pair(xz, v.clone());
    }
    if let Some(w) = y.strip_prefix(u) {
        let vw = v.concat(&w).expect("r(v) = r(u) = s(w)");
        return GisElement::Pair(x.clone(), vw);
    }
    GisElement::Zero
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GisBackend {
    graph: Graph,
}

impl GisBackend {
    pub fn new(graph: Graph) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Writes `x`, `y⁻¹` or `x*y^-1`, and a vertex by its name.
    pub fn render(&self, a: &GisElement) -> String {
        match a {
            GisElement::Zero => "0".to_string(),
            GisElement::Pair(x, y) if y.is_vertex() => self.graph.render_path(x),
            GisElement::Pair(x, y) if x.is_vertex() => format!("{}^-1", self.graph.render_path(y)),
            GisElement::Pair(x, y) => format!("{}*{}^-1", self.graph.render_path(x), self.graph.render_path(y)),
        }
    }

    /// The element with a given rendering, searching sizes up to `bound`.
    pub fn parse(&self, text: &str, bound: usize) -> Option<GisElement> {
        gis_enumerate(self, bound).into_iter().find(|a| self.render(a) == text)
    }
}

/// Zero and every `xy⁻¹` with `|x| + |y| ≤ size_bound`, by size and then
/// by the pair of paths.
pub fn gis_enumerate(b: &GisBackend, size_bound: usize) -> Vec<GisElement> {
    let mut by_range: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
    for p in enumerate_paths(&b.graph, None, size_bound) {
        by_range.entry(p.range()).or_default().push(p);
    }
    let mut out = Vec::new();
    for paths in by_range.values() {
        for x in paths {
            for y in paths.iter().filter(|y| x.len() + y.len() <= size_bound) {
                out.push(GisElement::Pair(x.clone(), y.clone()));
            }
        }
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out.insert(0, GisElement::Zero);
    out
}

impl Semigroup for GisBackend {
    type Elem = GisElement;

    fn zero(&self) -> GisElement {
        GisElement::Zero
    }

    fn mul(&self, a: &GisElement, b: &GisElement) -> GisElement {
        gis_mul(a, b)
    }

    /// Acyclic graphs give finite semigroups; then every element is returned.
    fn enumerate(&self, bound: usize) -> Vec<GisElement> {
        if self.is_finite() {
            gis_enumerate(self, 2 * self.graph.vertex_count())
        } else {
            gis_enumerate(self, bound)
        }
    }

    fn is_finite(&self) -> bool {
        !self.graph.has_cycles()
    }

    fn inverse(&self, a: &GisElement) -> Option<GisElement> {
        Some(a.inverse())
    }

    fn size(&self, a: &GisElement) -> usize {
        a.size()
    }

    fn render(&self, a: &GisElement) -> String {
        GisBackend::render(self, a)
    }
}
