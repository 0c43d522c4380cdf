// SPDX-License-Identifier: Apache-2.0

use grading::Verdict;

use crate::condition_y::condition_y_exact;
use crate::Graph;

/// The Leavitt path algebra of a nonempty finite graph is strongly ℤ-graded
/// iff the graph has no sinks, is row-finite and satisfies condition (Y).
pub fn lpa_strongly_graded_verdict(g: &Graph) -> Verdict {
    if g.is_empty() {
        return Verdict::fails("the criterion applies to nonempty graphs only", vec!["E⁰ = ∅".into()]);
    }
    let sinks: Vec<String> =
        (0..g.vertex_count()).filter(|&v| g.is_sink(v)).map(|v| g.vertex_name(v).to_string()).collect();
    let no_sinks = if sinks.is_empty() {
        Verdict::holds("every vertex emits an edge")
    } else {
        Verdict::fails(format!("{} is a sink", sinks[0]), sinks)
    };
    let row_finite = Verdict::holds("finite input graphs are row-finite");
    Verdict::all(
        "L_K(E) strongly graded",
        vec![
            ("no sinks".into(), no_sinks),
            ("row-finite".into(), row_finite),
            ("condition (Y)".into(), condition_y_exact(g)),
        ],
    )
}
