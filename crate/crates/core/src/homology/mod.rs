//! Homology of the adjoint complex as bimodules, and the verification
//! suites built on it.

pub mod groups;
pub mod report;
pub mod verify;

pub use groups::{conjugate_decomposition, h0_bimodule, h1_bimodule, h1_character};
pub use report::{Check, HomologyReport, SuiteReport};
pub use verify::{
    intersect_lambda, intersect_schur, lower_bound_check, lower_bound_subspaces, theorem_prediction, verify_differential,
    verify_euler, verify_identities, verify_inductive_step, verify_intersections, verify_r1_exactness, verify_r3_case,
    verify_small_n, verify_theorem,
};
