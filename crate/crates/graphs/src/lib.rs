// SPDX-License-Identifier: Apache-2.0

//! Finite directed graphs `E = (E⁰, E¹, r, s)` and the path combinatorics
//! behind graph inverse semigroups.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

pub mod condition_y;
pub mod covering;
pub mod fixtures;
pub mod lengths;
pub mod lpa;

pub use condition_y::{
    condition_y, condition_y_bounded, condition_y_bounded_for, condition_y_exact, lasso_against, lasso_for, Lasso,
    YMode,
};
pub use covering::{covering_graph, Covering, WeightMap};
pub use lengths::{in_length_set, locally_strong_condition, out_length_sets, EventuallyPeriodicSet};
pub use lpa::lpa_strongly_graded_verdict;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("edges do not compose: {0}")]
    NotComposable(String),
    #[error("invalid graph JSON: {0}")]
    Parse(String),
    #[error("invalid weight: {0}")]
    Weight(String),
    #[error("covering window is empty")]
    EmptyWindow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub rng: usize,
}

/// A finite graph. Vertex and edge ids share one namespace so that rendered
/// paths are unambiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    index: HashMap<String, usize>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> Result<Self, GraphError> {
        let mut ids = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if ids.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateId(v.clone()));
            }
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        let mut edge_list = Vec::with_capacity(edges.len());
        let mut edge_ids = HashMap::new();
        for (k, (id, src, rng)) in edges.into_iter().enumerate() {
            if ids.contains_key(&id) || edge_ids.insert(id.clone(), k).is_some() {
                return Err(GraphError::DuplicateId(id));
            }
            let lookup = |v: &String| {
                ids.get(v).copied().ok_or_else(|| GraphError::UnknownVertex { edge: id.clone(), vertex: v.clone() })
            };
            let (s, r) = (lookup(&src)?, lookup(&rng)?);
            out_edges[s].push(k);
            in_edges[r].push(k);
            edge_list.push(Edge { id, src: s, rng: r });
        }
        Ok(Self { vertices, edges: edge_list, out_edges, in_edges, index: edge_ids })
    }

    /// Convenience constructor from string slices.
    pub fn from_lists(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, GraphError> {
        Self::new(
            vertices.iter().map(|v| v.to_string()).collect(),
            edges.iter().map(|(e, s, r)| (e.to_string(), s.to_string(), r.to_string())).collect(),
        )
    }

    pub fn empty() -> Self {
        Self::new(Vec::new(), Vec::new()).expect("empty graph")
    }

    /// Reads `{"vertices": [...], "edges": [{"id","src","rng"}, ...]}`. A
    /// `weights` key, if present, is ignored here; see [`WeightMap::from_json`].
    pub fn from_json(v: &Value) -> Result<Self, GraphError> {
        let obj = v.as_object().ok_or_else(|| GraphError::Parse("expected an object".into()))?;
        let vertices = match obj.get("vertices") {
            None => Vec::new(),
            Some(Value::Array(vs)) => vs
                .iter()
                .map(|x| {
                    x.as_str().map(str::to_string).ok_or_else(|| GraphError::Parse("vertex ids must be strings".into()))
                })
                .collect::<Result<_, _>>()?,
            Some(_) => return Err(GraphError::Parse("`vertices` must be an array".into())),
        };
        let edges = match obj.get("edges") {
            None => Vec::new(),
            Some(Value::Array(es)) => es
                .iter()
                .map(|e| {
                    let field = |k: &str| {
                        e.get(k)
                            .and_then(Value::as_str)
                            .map(str::to_string)
                            .ok_or_else(|| GraphError::Parse(format!("edge is missing string field `{k}`")))
                    };
                    Ok((field("id")?, field("src")?, field("rng")?))
                })
                .collect::<Result<_, GraphError>>()?,
            Some(_) => return Err(GraphError::Parse("`edges` must be an array".into())),
        };
        Self::new(vertices, edges)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter().map(|e| json!({
                "id": e.id, "src": self.vertices[e.src], "rng": self.vertices[e.rng]
            })).collect::<Vec<_>>(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// `s⁻¹(v)`.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// `r⁻¹(v)`.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_edges[v].is_empty()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_edges[v].is_empty()
    }

    /// Validates composability of an edge sequence starting at `start`.
    pub fn path(&self, start: usize, edges: Vec<usize>) -> Result<Path, GraphError> {
        let mut at = start;
        for &e in &edges {
            let edge = self.edges.get(e).ok_or_else(|| GraphError::UnknownEdge(e.to_string()))?;
            if edge.src != at {
                return Err(GraphError::NotComposable(format!(
                    "`{}` does not start at `{}`",
                    edge.id, self.vertices[at]
                )));
            }
            at = edge.rng;
        }
        Ok(Path { source: start, range: at, edges })
    }

    /// A path from edge ids; the empty sequence is not a path.
    pub fn path_of_ids(&self, ids: &[&str]) -> Result<Path, GraphError> {
        let edges: Vec<usize> = ids
            .iter()
            .map(|id| self.edge_index(id).ok_or_else(|| GraphError::UnknownEdge(id.to_string())))
            .collect::<Result<_, _>>()?;
        let start = edges
            .first()
            .map(|&e| self.edges[e].src)
            .ok_or_else(|| GraphError::NotComposable("empty edge sequence".into()))?;
        self.path(start, edges)
    }

    /// Paths are written by concatenating edge ids, separated by `.` when
    /// some id is longer than one character.
    pub fn render_path(&self, p: &Path) -> String {
        if p.edges.is_empty() {
            return self.vertices[p.source].clone();
        }
        let sep = if self.edges.iter().all(|e| e.id.chars().count() == 1) { "" } else { "." };
        p.edges.iter().map(|&e| self.edges[e].id.as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Vertices from which an infinite path starts: those that reach a cycle.
    pub fn infinite_path_vertices(&self) -> BTreeSet<usize> {
        let mut alive: Vec<bool> = vec![true; self.vertex_count()];
        let mut out_degree: Vec<usize> = self.out_edges.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..self.vertex_count()).filter(|&v| out_degree[v] == 0).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &e in &self.in_edges[v] {
                let u = self.edges[e].src;
                out_degree[u] -= 1;
                if out_degree[u] == 0 && alive[u] {
                    stack.push(u);
                }
            }
        }
        (0..self.vertex_count()).filter(|&v| alive[v]).collect()
    }

    pub fn has_cycles(&self) -> bool {
        !self.infinite_path_vertices().is_empty()
    }
}

/// A vertex (length 0) or a composable edge sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: usize,
    range: usize,
    edges: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Self { source: v, range: v, edges: Vec::new() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// A path of length zero, i.e. a vertex.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self · other` when `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        (self.range == other.source).then(|| {
            let mut edges = self.edges.clone();
            edges.extend_from_slice(&other.edges);
            Path { source: self.source, range: other.range, edges }
        })
    }

    /// The path `z` with `self = prefix · z`, if `prefix` is an initial subpath.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if prefix.source != self.source || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { source: prefix.range, range: self.range, edges: self.edges[prefix.edges.len()..].to_vec() })
    }

    /// Initial subpath of length `k`.
    pub fn prefix(&self, k: usize, graph: &Graph) -> Path {
        let edges = self.edges[..k].to_vec();
        let range = edges.last().map_or(self.source, |&e| graph.edges[e].rng);
        Path { source: self.source, range, edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub sinks: Vec<String>,
    pub sources: Vec<String>,
    /// Vertices emitting at least one and finitely many edges.
    pub regular_vertices: Vec<String>,
    pub is_row_finite: bool,
    pub has_cycles: bool,
    pub is_empty: bool,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    let pick = |keep: &dyn Fn(usize) -> bool| -> Vec<String> {
        (0..g.vertex_count()).filter(|&v| keep(v)).map(|v| g.vertices[v].clone()).collect()
    };
    StructuralReport {
        sinks: pick(&|v| g.is_sink(v)),
        sources: pick(&|v| g.is_source(v)),
        regular_vertices: pick(&|v| !g.is_sink(v)),
        is_row_finite: true,
        has_cycles: g.has_cycles(),
        is_empty: g.is_empty(),
    }
}

/// All paths of length at most `max_length`, optionally only those with
/// source `from`; shortest first, then by edge sequence.
pub fn enumerate_paths(g: &Graph, from: Option<usize>, max_length: usize) -> Vec<Path> {
    let mut layer: Vec<Path> = match from {
        Some(v) => vec![Path::vertex(v)],
        None => (0..g.vertex_count()).map(Path::vertex).collect(),
    };
    let mut out = layer.clone();
    for _ in 0..max_length {
        let mut next = Vec::new();
        for p in &layer {
            for &e in g.out_edges(p.range) {
                let mut edges = p.edges.clone();
                edges.push(e);
                next.push(Path { source: p.source, range: g.edges[e].rng, edges });
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.vertices.join(", "))?;
        for e in &self.edges {
            write!(f, " {}:{}→{}", e.id, self.vertices[e.src], self.vertices[e.rng])?;
        }
        Ok(())
    }
}
