// SPDX-License-Identifier: Apache-2.0

//! The natural order on the idempotents `xx⁻¹` of `𝒮(E)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::{gis_enumerate, gis_mul, GisBackend, GisElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentOrderReport {
    pub idempotents: Vec<String>,
    /// Maximal among the nonzero idempotents: exactly the vertices.
    pub maximal: Vec<String>,
    /// Some nonzero idempotent has nothing nonzero below it. Only idempotents
    /// whose would-be successors fit the bound are judged.
    pub minimal_exist: bool,
    /// For each vertex `u`, the idempotents covered by `u`.
    pub per_maximal_submaximal_counts: BTreeMap<String, usize>,
    pub size_bound: usize,
}

pub fn idempotent_order_report(b: &GisBackend, size_bound: usize) -> IdempotentOrderReport {
    let idem: Vec<GisElement> =
        gis_enumerate(b, size_bound).into_iter().filter(|a| *a != GisElement::Zero && gis_mul(a, a) == *a).collect();
    let below = |a: &GisElement, c: &GisElement| a != c && gis_mul(a, c) == *a;
    let maximal: Vec<&GisElement> = idem.iter().filter(|u| !idem.iter().any(|w| below(u, w))).collect();
    let minimal_exist = idem.iter().any(|u| u.size() + 2 <= size_bound && !idem.iter().any(|w| below(w, u)));
    let mut counts = BTreeMap::new();
    for u in &maximal {
        let covered = idem.iter().filter(|w| below(w, u) && !idem.iter().any(|m| below(w, m) && below(m, u))).count();
        counts.insert(b.render(u), covered);
    }
    IdempotentOrderReport {
        idempotents: idem.iter().map(|a| b.render(a)).collect(),
        maximal: maximal.iter().map(|a| b.render(a)).collect(),
        minimal_exist,
        per_maximal_submaximal_counts: counts,
        size_bound,
    }
}
