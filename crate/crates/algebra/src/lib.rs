// SPDX-License-Identifier: Apache-2.0

//! Contracted semigroup rings over exact fields and the graded ring
//! constructions built on them: induced gradings, smash product rings, graded
//! Rees matrix rings and Cohn path algebras.
//!
//! Coefficients are exact (ℚ or `F_p`), so every check is an equality.
//! Coefficient rings are always unital fields; non-unital coefficients are
//! not representable.

pub mod cohn;
pub mod fixtures;
pub mod graded;
pub mod linalg;
pub mod rees_ring;
pub mod ring;
pub mod scalar;
pub mod smash_ring;

pub use cohn::{cohn_algebra, CohnReport, Corroboration};
pub use graded::{
    grading_restriction_check, homogeneous_parts, induced_external, induced_grading, ring_strongly_graded,
    ExternalGrading, InducedGrading,
};
pub use rees_ring::{rees_ring_build, rees_ring_iso, MatrixElement, ReesIsoReport, ReesRing};
pub use ring::{ring_arith, Arith, RingElement, SemigroupRing};
pub use scalar::{Field, Scalar};
pub use smash_ring::{smash_ring_iso, smash_ring_map, SmashIsoReport, SmashRing, SmashRingElement};

#[derive(Debug, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("sandwich entry violates the degree condition: {0}")]
    SandwichDegreeViolation(String),
    #[error("malformed input: {0}")]
    Data(String),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error(transparent)]
    Gis(#[from] gis::GisError),
}
