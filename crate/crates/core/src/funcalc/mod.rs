//! Multilinear components of tensor products of exterior and divided powers,
//! with their symmetric group actions and structural natural maps.

pub mod basis;
pub mod isotypic;
pub mod natural;
pub mod rep;
pub mod shape;

pub use basis::MultilinearBasis;
pub use isotypic::{
    group_algebra_matrix, is_equivariant, isotypic_component, isotypic_projector, multiplicity_space, young_symmetrizer,
    GroupAlgebraElement,
};
pub use natural::{
    de_rham_d, de_rham_square_commutes, gamma_coproduct, gamma_coproduct_multi, gamma_to_tensor, wedge_coproduct, wedge_coproduct_multi,
    wedge_product, NaturalMap,
};
pub use rep::{
    check_invariant, full_bimodule_character, full_character, subrep_bimodule_character, subrep_character,
    tensor_subspaces, trace_on, BlockMap, Representation, ShapeSum,
};
pub use shape::{FunctorShape, Slot, SlotKind};

/// Intersection of two subspaces of the same multilinear component.
pub fn intersect(a: &crate::QSubspace, b: &crate::QSubspace) -> crate::Result<crate::QSubspace> {
    a.intersect(b)
}

/// Enumerates the multilinear basis of `shape` on `n` letters.
pub fn enumerate_basis(shape: &FunctorShape, n: usize) -> crate::Result<MultilinearBasis> {
    MultilinearBasis::with_letters(shape, n)
}
