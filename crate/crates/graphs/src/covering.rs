// SPDX-License-Identifier: Apache-2.0

//! Edge weights and the covering graph `E ×_ω Γ`, cut to a finite window of
//! levels.

use grade_group::{GradeGroup, GroupElement};
use serde_json::Value;

use crate::{Graph, GraphError, Path};

/// `ω: E¹ → Γ`, indexed by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    pub group: GradeGroup,
    weights: Vec<GroupElement>,
}

impl WeightMap {
    pub fn new(g: &Graph, group: GradeGroup, weights: Vec<GroupElement>) -> Result<Self, GraphError> {
        if weights.len() != g.edge_count() {
            return Err(GraphError::Weight(format!("{} weights for {} edges", weights.len(), g.edge_count())));
        }
        if let Some(w) = weights.iter().find(|w| !group.contains(w)) {
            return Err(GraphError::Weight(format!("{w} is not in {group}")));
        }
        Ok(Self { group, weights })
    }

    pub fn constant(g: &Graph, group: GradeGroup, value: GroupElement) -> Result<Self, GraphError> {
        Self::new(g, group, vec![value; g.edge_count()])
    }

    /// Every edge has weight 1 in ℤ: the natural grading.
    pub fn unit(g: &Graph) -> Self {
        Self { group: GradeGroup::Integers, weights: vec![GroupElement::Int(1); g.edge_count()] }
    }

    /// Reads the optional `weights` object of the graph JSON; edges without a
    /// weight get the image of 1 in `group`.
    pub fn from_json(g: &Graph, v: &Value, group: &GradeGroup) -> Result<Self, GraphError> {
        let default = group.from_int(1).unwrap_or_else(|| group.identity());
        let mut weights = vec![default; g.edge_count()];
        match v.get("weights") {
            None | Some(Value::Null) => {}
            Some(Value::Object(map)) => {
                for (id, w) in map {
                    let e = g.edge_index(id).ok_or_else(|| GraphError::UnknownEdge(id.clone()))?;
                    weights[e] = group.parse_element(w).map_err(|err| GraphError::Weight(format!("`{id}`: {err}")))?;
                }
            }
            Some(_) => return Err(GraphError::Parse("`weights` must be an object".into())),
        }
        Self::new(g, group.clone(), weights)
    }

    pub fn get(&self, e: usize) -> &GroupElement {
        &self.weights[e]
    }

    pub fn as_slice(&self) -> &[GroupElement] {
        &self.weights
    }

    /// `ω(e₁⋯eₙ) = ω(e₁)⋯ω(eₙ)`, and ε on vertices.
    pub fn of_path(&self, p: &Path) -> GroupElement {
        p.edges().iter().fold(self.group.identity(), |acc, &e| self.group.op(&acc, &self.weights[e]))
    }
}

#[derive(Debug, Clone)]
pub struct Covering {
    pub graph: Graph,
    pub weights: WeightMap,
    /// `(v, α)` for each covering vertex `v_α`.
    pub vertex_origin: Vec<(usize, GroupElement)>,
    /// `(e, α)` for each covering edge `e_α`.
    pub edge_origin: Vec<(usize, GroupElement)>,
    /// Edges `e_α` whose range level falls outside the window.
    pub dropped: Vec<String>,
}

impl Covering {
    pub fn vertex_at(&self, v: usize, alpha: &GroupElement) -> Option<usize> {
        self.vertex_origin.iter().position(|(w, a)| *w == v && a == alpha)
    }

    pub fn edge_at(&self, e: usize, alpha: &GroupElement) -> Option<usize> {
        self.edge_origin.iter().position(|(f, a)| *f == e && a == alpha)
    }
}

fn level_name(name: &str, alpha: &GroupElement) -> String {
    format!("{name}_{alpha}")
}

/// Vertices `v_α` and edges `e_α` with `s(e_α) = s(e)_α` and
/// `r(e_α) = r(e)_{ω(e)⁻¹α}`, for `α` in the window. Each `e_α` keeps the
/// weight `ω(e)`.
pub fn covering_graph(g: &Graph, weights: &WeightMap, window: &[GroupElement]) -> Result<Covering, GraphError> {
    let group = &weights.group;
    let mut levels: Vec<GroupElement> = Vec::new();
    for alpha in window {
        if !group.contains(alpha) {
            return Err(GraphError::Weight(format!("window element {alpha} is not in {group}")));
        }
        if !levels.contains(alpha) {
            levels.push(alpha.clone());
        }
    }
    if levels.is_empty() {
        return Err(GraphError::EmptyWindow);
    }
    let mut vertex_origin = Vec::new();
    let mut names = Vec::new();
    for alpha in &levels {
        for v in 0..g.vertex_count() {
            names.push(level_name(g.vertex_name(v), alpha));
            vertex_origin.push((v, alpha.clone()));
        }
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    let mut lifted = Vec::new();
    let mut dropped = Vec::new();
    for alpha in &levels {
        for (e, edge) in g.edges().iter().enumerate() {
            let target = group.op(&group.inv(weights.get(e)), alpha);
            let name = level_name(&edge.id, alpha);
            if !levels.contains(&target) {
                dropped.push(name);
                continue;
            }
            edges.push((
                name,
                level_name(g.vertex_name(edge.src), alpha),
                level_name(g.vertex_name(edge.rng), &target),
            ));
            edge_origin.push((e, alpha.clone()));
            lifted.push(weights.get(e).clone());
        }
    }
    let graph = Graph::new(names, edges)?;
    let weights = WeightMap::new(&graph, group.clone(), lifted)?;
    Ok(Covering { graph, weights, vertex_origin, edge_origin, dropped })
}
