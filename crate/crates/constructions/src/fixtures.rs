// SPDX-License-Identifier: Apache-2.0

//! Standard inputs for the constructions.

use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::cyclic_with_zero_trivially_graded;

use crate::rees::{rees_matrix_build, ReesMatrix, ReesMatrixData, SandwichEntry};

/// 2 × 2 Rees matrix semigroup over `ℤ/n ∪ {0}` (trivially ℤ/2-graded) with
/// the identity sandwich and `ᾱ = β̄ = (0, 1)`. The whole semigroup is
/// 0-simple while its degree-0 component (the diagonal) has two proper
/// nonzero ideals.
pub fn diagonal_rees_data() -> ReesMatrixData {
    let lvl = |k| GroupElement::Residue(k);
    let id = || SandwichEntry::Elem("1".into());
    ReesMatrixData {
        rows: vec!["1".into(), "2".into()],
        cols: vec!["1".into(), "2".into()],
        alpha: vec![lvl(0), lvl(1)],
        beta: vec![lvl(0), lvl(1)],
        sandwich: vec![vec![id(), SandwichEntry::Zero], vec![SandwichEntry::Zero, id()]],
    }
}

pub fn diagonal_rees(n: usize) -> ReesMatrix {
    let s = cyclic_with_zero_trivially_graded(n, GradeGroup::Cyclic(2));
    rees_matrix_build(&s, &diagonal_rees_data()).expect("identity sandwich satisfies the degree condition")
}
