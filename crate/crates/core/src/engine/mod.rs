//! Permutation groups: stabilizer chains, element ranks, conjugacy classes,
//! subgroup constructions, coset actions and action predicates.

pub mod chain;
pub mod classes;
pub mod coset;
pub mod group;
pub mod predicates;
pub mod subgroups;

pub use chain::StabChain;
pub use classes::ConjClassTable;
pub use coset::{CosetAction, Quotient};
pub use group::{PermGroup, Tier, DEFAULT_CAP, EXTENDED_CAP};
pub use predicates::{structure_predicates, ActionPredicates};
pub use subgroups::{
    center, centralizer, derived_subgroup, is_conjugate_in, normal_closure, normal_core,
    normal_subgroups, normalizer, sylow_subgroup, NormalSubgroup,
};
