//! Exact computational group theory for derangements in finite
//! permutation groups.
//!
//! The scalar-generic pieces (cyclotomic numbers, linear algebra) are
//! parameterised over `num-traits` types or a field context; the aliases
//! below fix the concrete types used throughout the crate.

pub mod arith;
pub mod chars;
pub mod constructors;
pub mod derangements;
pub mod engine;
pub mod error;
pub mod field;
pub mod linalg;
pub mod perm;
pub mod structure;
pub mod suites;
pub mod tables;

pub use engine::{PermGroup, Tier};
pub use error::{Error, Result};
pub use perm::Perm;

/// Exact rationals used for proportions and inner products.
pub type Rational = num_rational::Ratio<i128>;

/// Cyclotomic integers, the values of characters.
pub type Cyc = chars::Cyclotomic<i64>;

/// Cyclotomic rationals, used where a division precedes an integrality
/// check.
pub type CycQ = chars::Cyclotomic<Rational>;
