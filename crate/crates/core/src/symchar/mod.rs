//! Characters of symmetric groups and of products of two symmetric groups.

mod classfn;
mod mn;

pub use classfn::{
    character_table, decompose, decompose_bimodule, decomposition_dimension, induce_outer, BimoduleClassFunction,
    CharacterTable, ClassFunction, Decomposition, Multiplicity,
};
pub use mn::irr_char;
