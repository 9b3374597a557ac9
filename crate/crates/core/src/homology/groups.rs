use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;

use super::report::{Check, HomologyReport};
use crate::error::{Error, Result};
use crate::exactalg::{kernel_basis, Partition, Permutation};
use crate::freelie::{adbar_matrix, Adbar};
use crate::funcalc::{full_bimodule_character, subrep_bimodule_character, Representation};
use crate::symchar::{decomposition_dimension, BimoduleClassFunction, Decomposition};
use crate::{QSubspace, Rational};

fn bookkeeping(name: &str, d: &Decomposition, dim: usize) -> Check {
    let total = decomposition_dimension(d);
    Check::new(
        format!("{name} dimension bookkeeping"),
        total == dim as u128,
        format!("sum of mult * dim = {total}, subspace dimension {dim}"),
    )
}

/// Kernel of the differential and its bimodule character.
pub fn h1_character(ad: &Adbar) -> Result<(QSubspace, BimoduleClassFunction)> {
    let kernel = kernel_basis(&ad.matrix).basis;
    let chi = subrep_bimodule_character(&ad.domain, &kernel)?;
    Ok((kernel, chi))
}

/// `H_1` in weight `n`: the kernel of `V x Lie^{x r} -> Lie^{x r}`.
pub fn h1_bimodule(r: usize, n: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    let ad = adbar_matrix(r, n);
    let (kernel, chi) = h1_character(&ad)?;
    let d = chi.decompose()?;
    let checks = vec![bookkeeping("H1", &d, kernel.dim())];
    Ok(HomologyReport {
        r,
        n,
        h1_dim: Some(kernel.dim() as u64),
        h1: Some(d),
        h0: None,
        h0_dim: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
        checks,
    })
}

/// Character of the cokernel computed from the annihilator of the image:
/// for `f` in `ker A^T` the trace of `rho(g)^T` only needs the columns of
/// `rho(g)` at the pivots of the annihilator basis.
fn cokernel_character_direct(ad: &Adbar) -> Result<(usize, BimoduleClassFunction)> {
    let ann = kernel_basis(&ad.matrix.transpose()).basis;
    let (n, r) = (ad.n, ad.r);
    let pairs: Vec<(Partition, Partition)> =
        Partition::all(n).into_iter().flat_map(|x| Partition::all(r).into_iter().map(move |y| (x.clone(), y))).collect();
    let values = pairs
        .par_iter()
        .map(|(x, y)| {
            let sigma = Permutation::class_representative(x);
            let pi = Permutation::class_representative(y);
            let mut total = Rational::zero();
            for (b, &p) in ann.vectors().iter().zip(ann.pivots()) {
                let col = ad.codomain.act(&sigma, &pi, p);
                let (mut i, mut j) = (0, 0);
                while i < col.len() && j < b.len() {
                    match col[i].0.cmp(&b[j].0) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            total += &col[i].1 * &b[j].1;
                            i += 1;
                            j += 1;
                        }
                    }
                }
            }
            total
        })
        .collect();
    Ok((ann.dim(), BimoduleClassFunction::from_values(n, r, values)?))
}

/// `H_0` in weight `n`, the cokernel, computed directly and through the
/// Euler relation `chi_H0 = chi_H1 + chi(Lie^{x r}) - chi(V x Lie^{x r})`.
pub fn h0_bimodule(r: usize, n: usize) -> Result<HomologyReport> {
    let start = Instant::now();
    let ad = adbar_matrix(r, n);
    let (kernel, h1) = h1_character(&ad)?;
    let (coker_dim, direct) = cokernel_character_direct(&ad)?;
    let euler = h1.add(&full_bimodule_character(&ad.codomain))?.sub(&full_bimodule_character(&ad.domain))?;
    if direct != euler {
        return Err(Error::ConsistencyFailure(format!("H0 for r = {r}, n = {n}: direct {direct:?}, Euler {euler:?}")));
    }
    let d0 = direct.decompose()?;
    let d1 = h1.decompose()?;
    let checks = vec![
        bookkeeping("H1", &d1, kernel.dim()),
        bookkeeping("H0", &d0, coker_dim),
        Check::new("H0 direct equals Euler route", true, format!("dimension {}", direct.dimension())),
    ];
    Ok(HomologyReport {
        r,
        n,
        h1_dim: Some(kernel.dim() as u64),
        h0_dim: Some(coker_dim as u64),
        h1: Some(d1),
        h0: Some(d0),
        elapsed_ms: start.elapsed().as_millis() as u64,
        checks,
    })
}

/// Partition conjugation applied to both factors of every summand.
pub fn conjugate_decomposition(d: &Decomposition) -> Decomposition {
    let mut out: Decomposition = d
        .iter()
        .map(|m| crate::symchar::Multiplicity { lambda: m.lambda.conjugate(), mu: m.mu.conjugate(), mult: m.mult })
        .collect();
    out.sort_by(|a, b| (&a.lambda, &a.mu).cmp(&(&b.lambda, &b.mu)));
    out
}
