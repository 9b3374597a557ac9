//! The multilinear free Lie algebra in tensor coordinates, the adjoint
//! differential `V x Lie^{x r} -> Lie^{x r}`, and the structural maps used to
//! analyse its kernel in weight `r + 2`.

pub mod lie;
pub mod maps;
pub mod space;

pub use lie::{bracket, expand_left_normed, lie_basis, rewrite_left_normed, LieBasis, TensorPoly, Word};
pub use maps::{
    alpha, alpha_cycle, alpha_ij, beta, beta_space, block_shape, block_sum, cocycle_subspace, deltabar, idempotent_e, iota,
    kappa, kappa_tilde, pair_shape, pairs, project_to_block, tau, tau_alpha,
};
pub use space::{adbar_matrix, bracket_letter, delta_doubleprime, delta_prime, Adbar, ComponentMap, LieTensorSpace};
