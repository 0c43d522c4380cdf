// SPDX-License-Identifier: Apache-2.0

//! Semigroups built from a graded semigroup `S` with grading group `Γ`:
//! the smash product `S#Γ`, the stable Rees semigroup `S_Γ`, graded Rees
//! matrix semigroups, and the isomorphism between `𝒮` of a covering graph
//! and a smash product.

pub mod covering_iso;
pub mod fixtures;
pub mod rees;
pub mod smash;
pub mod stable_rees;

pub use covering_iso::{covering_iso, CoveringIso, CoveringIsoReport};
pub use rees::{rees_matrix_build, ReesMatrix, ReesMatrixData, SandwichEntry};
pub use smash::{smash_build, smash_report, smash_shift, verify_shift, Smash, SmashElement, SmashReport};
pub use stable_rees::{
    iso_smash_stable_eps, smash_to_stable, stable_rees_build, stable_rees_report, IsoReport, StableRees,
    StableReesElement, StableReesReport,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("sandwich entry p[{j}][{i}] violates the degree condition: {detail}")]
    SandwichDegreeViolation { j: String, i: String, detail: String },
    #[error("semigroup has no local units: {0}")]
    NoLocalUnits(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("malformed Rees data: {0}")]
    Data(String),
    #[error(transparent)]
    Graph(#[from] graphs::GraphError),
    #[error(transparent)]
    Gis(#[from] gis::GisError),
    #[error(transparent)]
    Grading(#[from] grading::GradingError),
}
