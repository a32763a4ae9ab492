//! Finite restriction semigroups, their germ categories and Booleanizations.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod boolean;
pub mod catalog;
pub mod category;
pub mod constellation;
pub mod error;
pub mod germs;
pub mod lattice;
pub mod order;
pub mod pmap;
pub mod proper;
pub mod relation;
pub mod semigroup;

/// Dense index of an element in its semigroup.
pub type ElementId = usize;

pub use error::{Error, Result};
pub use pmap::{Closure, PartialMap};
pub use relation::{ElementRelation, RelationKind};
pub use semigroup::{Axioms, Signature, UnarySemigroup, Verdict, Violation};
