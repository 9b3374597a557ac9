//! Exact linear algebra, permutations and partitions.

pub mod elim;
pub mod field;
pub mod matrix;
pub mod partition;
pub mod perm;
pub mod subspace;

pub use elim::{characteristic_polynomial, column_space, determinant, inverse, kernel_basis, rank, solve_in_span, Kernel};
pub use field::Field;
pub use matrix::{Matrix, SparseVec};
pub use partition::{partitions_of, Partition};
pub use perm::Permutation;
pub use subspace::Subspace;
