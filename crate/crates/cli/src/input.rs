// SPDX-License-Identifier: Apache-2.0

//! Loading and validating command inputs. Every failure here maps to exit code 3.

use std::path::Path;

use grade_group::GradeGroup;
use grading::FiniteGraded;
use graphs::{Graph, WeightMap};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::InputError;

/// Raw input bytes together with their parsed JSON and SHA-256 digest.
pub struct Input {
    pub digest: String,
    pub json: Value,
}

impl Input {
    pub fn read(path: &Path) -> Result<Self, InputError> {
        let bytes = std::fs::read(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
        Self::from_bytes(&bytes)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, InputError> {
        let json = serde_json::from_slice(bytes).map_err(|e| InputError(format!("malformed JSON: {e}")))?;
        Ok(Self { digest: digest(bytes), json })
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// `Z`, `Z/n`, `Zn`, `trivial`, or an inline group JSON object.
pub fn parse_group(spec: &str) -> Result<GradeGroup, InputError> {
    let spec = spec.trim();
    let bad = |detail: String| InputError(format!("--group {spec:?}: {detail}"));
    if spec.starts_with('{') {
        let v: Value = serde_json::from_str(spec).map_err(|e| bad(e.to_string()))?;
        return GradeGroup::from_json(&v).map_err(|e| bad(e.to_string()));
    }
    match spec {
        "Z" => Ok(GradeGroup::Integers),
        "trivial" | "1" => Ok(GradeGroup::trivial()),
        _ => {
            let n = spec
                .strip_prefix("Z/")
                .or_else(|| spec.strip_prefix("Z"))
                .and_then(|n| n.parse::<u64>().ok())
                .ok_or_else(|| bad("expected Z, Z/n, trivial or a group JSON object".into()))?;
            GradeGroup::cyclic(n).map_err(|e| bad(e.to_string()))
        }
    }
}

/// A validated graph with its weight map. Missing weights default to the
/// image of 1 in `group`, which is ℤ unless overridden.
pub fn parse_graph(v: &Value, group: Option<&GradeGroup>) -> Result<(Graph, WeightMap), InputError> {
    let g = Graph::from_json(v).map_err(|e| InputError(format!("graph: {e}")))?;
    let group = group.cloned().unwrap_or(GradeGroup::Integers);
    let weights = WeightMap::from_json(&g, v, &group).map_err(|e| InputError(format!("key \"weights\": {e}")))?;
    Ok((g, weights))
}

/// A finite graded semigroup; `group` overrides the file's `group` key.
pub fn parse_graded(v: &Value, group: Option<&GradeGroup>) -> Result<FiniteGraded, InputError> {
    FiniteGraded::from_json(v, group).map_err(|e| InputError(format!("graded semigroup: {e}")))
}
