//! Congruences on finite posets.
//!
//! A congruence of a poset is an equivalence relation compatible with the
//! set-valued operators `Max L(x, y)` (maximal common lower bounds) and
//! `Min U(x, y)` (minimal common upper bounds). This crate enumerates them,
//! extends the notion to relatively pseudocomplemented posets and Boolean
//! posets, and ships executable checks for the structural results about
//! congruence classes, kernels and filters.
//!
//! Posets are limited to [`MAX_ELEMENTS`] elements; sets of elements are
//! bitsets.

pub mod boolean;
pub mod checks;
pub mod congruence;
pub mod corpus;
pub mod dot;
pub mod error;
pub mod family;
pub mod heyting;
pub mod optable;
pub mod poset;
pub mod random;
pub mod relation;
pub mod set;
pub mod text;

pub use boolean::Complementation;
pub use congruence::{enumerate_congruences, enumerate_congruences_bruteforce, is_congruence, Quotient};
pub use error::{Error, Result};
pub use family::ConFamily;
pub use heyting::StarTable;
pub use optable::OpTable;
pub use poset::{Poset, RelationMode};
pub use relation::{EquivRelation, Relation};
pub use set::{ElementSet, MAX_ELEMENTS};
pub use text::PosetDocument;
