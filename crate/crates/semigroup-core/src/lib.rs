// SPDX-License-Identifier: Apache-2.0

//! Semigroups with zero.
//!
//! Everything downstream is written against the [`Semigroup`] trait. Finite
//! semigroups are stored as Cayley tables ([`FiniteSemigroup`]); infinite ones
//! (graph inverse semigroups, smash products over ℤ, ...) implement the trait
//! with canonical normal forms and a size function used for bounded
//! enumeration.

use std::fmt::Debug;
use std::hash::Hash;

pub mod finite;
pub mod fixtures;
pub mod green;
pub mod ideals;
pub mod inverse;
pub mod partial;

pub use finite::{adjoin_identity, materialize, FiniteSemigroup};
pub use green::{green_classes, green_classes_of, GreenClasses, Partition};
pub use ideals::{ideals, IdealKind};
pub use inverse::{inverse_structure, local_units_report, natural_leq, InverseReport, LocalUnitsReport};
pub use partial::PartialBijection;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("zero is not absorbing at {0}")]
    ZeroNotAbsorbing(String),
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("enumerated fragment is not closed: {0}")]
    NotClosed(String),
    #[error("operation requires a finite backend")]
    InfiniteBackend,
    #[error("operation requires an inverse semigroup")]
    NotInverse,
    #[error("cannot parse semigroup: {0}")]
    Parse(String),
}

/// A semigroup with an absorbing zero, possibly infinite.
///
/// Elements are canonical: two values are the same element iff they are equal.
pub trait Semigroup {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn zero(&self) -> Self::Elem;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// All elements of size at most `bound`, zero included. Monotone in
    /// `bound`; finite backends return the whole carrier.
    fn enumerate(&self, bound: usize) -> Vec<Self::Elem>;

    fn is_finite(&self) -> bool;

    /// The unique inverse, for backends that know they are inverse semigroups.
    fn inverse(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Backend-defined size used by `enumerate`.
    fn size(&self, _a: &Self::Elem) -> usize {
        0
    }

    fn render(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_idempotent(&self, a: &Self::Elem) -> bool {
        self.mul(a, a) == *a
    }
}

impl<S: Semigroup + ?Sized> Semigroup for &S {
    type Elem = S::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn enumerate(&self, bound: usize) -> Vec<Self::Elem> {
        (**self).enumerate(bound)
    }
    fn is_finite(&self) -> bool {
        (**self).is_finite()
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (**self).inverse(a)
    }
    fn size(&self, a: &Self::Elem) -> usize {
        (**self).size(a)
    }
    fn render(&self, a: &Self::Elem) -> String {
        (**self).render(a)
    }
}

/// Checks associativity and absorption of zero on every enumerated triple.
/// Returns the first offending triple, rendered.
pub fn spot_check<S: Semigroup>(s: &S, bound: usize) -> Result<(), SemigroupError> {
    let elems = s.enumerate(bound);
    let zero = s.zero();
    for a in &elems {
        if s.mul(a, &zero) != zero || s.mul(&zero, a) != zero {
            return Err(SemigroupError::ZeroNotAbsorbing(s.render(a)));
        }
        for b in &elems {
            let ab = s.mul(a, b);
            for c in &elems {
                if s.mul(&ab, c) != s.mul(a, &s.mul(b, c)) {
                    return Err(SemigroupError::NotAssociative(s.render(a), s.render(b), s.render(c)));
                }
            }
        }
    }
    Ok(())
}
