//! Exact computation of the homology of free Lie algebras with coefficients
//! in tensor powers of the adjoint representation, one multilinear component
//! at a time.
//!
//! The linear algebra is generic over [`exactalg::Field`]; everything
//! downstream of it is instantiated at [`Rational`].

pub mod error;
pub mod exactalg;
pub mod freelie;
pub mod funcalc;
pub mod homology;
pub mod symchar;

pub use error::{Error, Result};

/// Arbitrary precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;
pub type QMatrix = exactalg::Matrix<Rational>;
pub type QSubspace = exactalg::Subspace<Rational>;

/// Caps rayon's global pool at `LIEHO_THREADS` threads when the variable is
/// set to a positive integer. Returns the cap that was applied, if any.
pub fn init_threads() -> Option<usize> {
    let n = std::env::var("LIEHO_THREADS").ok()?.trim().parse::<usize>().ok().filter(|&n| n > 0)?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().ok().map(|_| n)
}
