//! Exact complex characters.

pub mod classfn;
pub mod cyclotomic;
pub mod table;

pub use classfn::{
    burnside_check, find_unique_vanishing_induced, fusion, induce, inner_product, mno_check,
    permutation_character, restrict, ClassFunction, InducedHit,
};
pub use cyclotomic::{Basis, Cyclotomic, Scalar};
pub use table::CharacterTable;
