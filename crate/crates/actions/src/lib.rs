// SPDX-License-Identifier: Apache-2.0

//! Actions of finite graded semigroups: pointed and graded S-sets, tensor
//! products, the smash and Dade functors, partial symmetries, graded
//! embeddings, groupoids of germs and the Cauchy completion.
//!
//! Semigroup elements are indices into a [`FiniteSemigroup`](semigroup_core::FiniteSemigroup);
//! points of an S-set are indices `0..n` with a distinguished zero.

pub mod cauchy;
pub mod dade;
pub mod family;
pub mod germs;
pub mod smash_functor;
pub mod sset;
pub mod symmetry;
pub mod tensor;

pub use cauchy::{
    cauchy_completion, principal_projective, projective_indecomposables, CauchyCategory, ProjectiveReport,
};
pub use dade::{dade_check, products_fill_components, DadeReport};
pub use family::graded_unital_family;
pub use germs::{germ_groupoid, Germ, GermGroupoid};
pub use smash_functor::{smash_functor_roundtrip, Roundtrip};
pub use sset::{graded_shift, graded_validate, is_action, left_regular, sset_validate, GradedSSet, PointedSSet};
pub use symmetry::{
    cayley_graded_embedding, grading_search, partial_symmetry_build, vagner_preston_graded, vagner_preston_maps,
    EmbeddingReport, PartialSymmetries,
};
pub use tensor::{mu_check, nu_check, tensor, tensor_left_action, tensor_product_maps, NuReport, Tensor, TensorMaps};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("operation requires an inverse semigroup")]
    NotInverse,
    #[error("semigroup has no local units")]
    NoLocalUnits,
    #[error("S-set is not unital: point {0} is not of the form s·y")]
    NotUnital(String),
    #[error("operation requires a finite grading group")]
    InfiniteGroup,
    #[error("partial action is degenerate: {0} lies in no X_e")]
    DegenerateAction(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error(transparent)]
    Grading(#[from] grading::GradingError),
    #[error(transparent)]
    Semigroup(#[from] semigroup_core::SemigroupError),
}
