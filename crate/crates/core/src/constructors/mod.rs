//! Constructions of specific permutation groups.

pub mod affine;
pub mod almost_simple;
pub mod catalog;
pub mod families;
pub mod hering;
pub mod matrix;
pub mod two_class_affine;

pub use families::{
    alternating, cyclic, dihedral, direct_product, mathieu10, mathieu11, pgaml2, pgl2, psigmal2,
    psl2, regular_representation, symmetric, ProjectiveLine,
};
