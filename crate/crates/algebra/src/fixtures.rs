// SPDX-License-Identifier: Apache-2.0

//! Ring-level fixtures.

use constructions::fixtures::{diagonal_rees, diagonal_rees_data};
use constructions::{ReesMatrix, ReesMatrixData};
use grade_group::{GradeGroup, GroupElement};
use grading::fixtures::cyclic_with_zero_trivially_graded;
use grading::FiniteGraded;

use crate::graded::ExternalGrading;
use crate::ring::SemigroupRing;
use crate::scalar::Field;

/// The matrix units `{0, e_11, e_12, e_21, e_22}` as the Rees matrix semigroup
/// over `{0, 1}` with identity sandwich, so that `K[S] ≅ M_2(K)`. Its own
/// grading puts the diagonal in degree 0 and the off-diagonal in degree 1.
pub fn matrix_units() -> ReesMatrix {
    diagonal_rees(1)
}

/// `{0, 1}` graded trivially by ℤ/2, whose contracted ring is the field itself.
pub fn scalars_as_ring() -> FiniteGraded {
    cyclic_with_zero_trivially_graded(1, GradeGroup::Cyclic(2))
}

/// Rees data for `M_2(K[{0,1}]) = M_2(K)` with `ᾱ = β̄ = (0, 1)` and identity sandwich.
pub fn matrix_ring_data() -> ReesMatrixData {
    diagonal_rees_data()
}

/// The ℤ/2-grading of `M_2(K)` with
/// `K[S]_0 = {(a, b−a; 0, b)}` and `K[S]_1 = {(d, c; d, −d)}`.
/// It is a ring grading, but `e_11` is not homogeneous.
pub fn split_matrix_grading(units: &ReesMatrix, field: Field) -> ExternalGrading {
    let ring = SemigroupRing::new(units.sg(), field);
    let e = |i: usize, j: usize| units.index_of(i, 1, j).expect("matrix unit");
    let degree_zero =
        vec![ring.from_terms([(1, e(0, 0)), (-1, e(0, 1))]), ring.from_terms([(1, e(0, 1)), (1, e(1, 1))])];
    let degree_one =
        vec![ring.from_terms([(1, e(0, 0)), (1, e(1, 0)), (-1, e(1, 1))]), ring.from_terms([(1, e(0, 1))])];
    ExternalGrading {
        group: GradeGroup::Cyclic(2),
        components: vec![(GroupElement::Residue(0), degree_zero), (GroupElement::Residue(1), degree_one)],
    }
}
