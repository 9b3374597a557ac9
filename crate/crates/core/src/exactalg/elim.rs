//! Sparse Gaussian elimination over a field.
//!
//! Pivoting is chosen for sparsity: columns are eliminated in order of
//! increasing initial column count, and within a column the pivot row is the
//! one with the fewest nonzeros (lowest row index on ties). Every choice is
//! deterministic, so kernels and ranks are reproducible run to run.

use std::collections::BTreeSet;

use super::field::Field;
use super::matrix::{axpy, Matrix, SparseVec};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Row echelon form produced by [`row_echelon`].
///
/// `pivots[k] = (c, row)`: `row` has a nonzero at column `c` and no entries in
/// the pivot columns of `pivots[..k]`.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub ncols: usize,
    pub pivots: Vec<(usize, SparseVec<T>)>,
}

impl<T: Field> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for (c, _) in &self.pivots {
            is_pivot[*c] = true;
        }
        (0..self.ncols).filter(|c| !is_pivot[*c]).collect()
    }

    /// Kernel vectors by back substitution, one per free column; the vector
    /// for free column `f` is 1 at `f` and 0 at every other free column.
    pub fn kernel_vectors(&self) -> Vec<SparseVec<T>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x: Vec<T> = vec![T::zero(); self.ncols];
                x[f] = T::one();
                for (c, row) in self.pivots.iter().rev() {
                    let mut s = T::zero();
                    let mut pivot = T::one();
                    for (j, a) in row {
                        if j == c {
                            pivot = a.clone();
                        } else if !x[*j].is_zero() {
                            s = s + a.clone() * x[*j].clone();
                        }
                    }
                    if !s.is_zero() {
                        x[*c] = -s / pivot;
                    }
                }
                x.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect()
    }
}

/// Reduces the rows of `m` to echelon form.
pub fn row_echelon<T: Field>(m: &Matrix<T>) -> Echelon<T> {
    let ncols = m.ncols();
    let mut rows: Vec<Option<SparseVec<T>>> = m.to_sparse_rows().into_iter().map(Some).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, row) in rows.iter().enumerate() {
        for (j, _) in row.as_ref().unwrap() {
            col_rows[*j].insert(i);
        }
    }
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by_key(|&c| (col_rows[c].len(), c));

    let mut pivots = Vec::new();
    for c in order {
        let Some(&p) = col_rows[c].iter().min_by_key(|&&i| (rows[i].as_ref().unwrap().len(), i)) else {
            continue;
        };
        let prow = rows[p].take().unwrap();
        for (j, _) in &prow {
            col_rows[*j].remove(&p);
        }
        let pval = prow.iter().find(|(j, _)| *j == c).unwrap().1.clone();
        let targets: Vec<usize> = col_rows[c].iter().copied().collect();
        for i in targets {
            let old = rows[i].take().unwrap();
            let coeff = old.iter().find(|(j, _)| *j == c).unwrap().1.clone();
            let factor = -(coeff / pval.clone());
            let new = axpy(&old, &factor, &prow);
            update_support(&mut col_rows, i, &old, &new);
            rows[i] = Some(new);
        }
        pivots.push((c, prow));
    }
    Echelon { ncols, pivots }
}

fn update_support<T>(col_rows: &mut [BTreeSet<usize>], i: usize, old: &SparseVec<T>, new: &SparseVec<T>) {
    let (mut p, mut q) = (0, 0);
    while p < old.len() || q < new.len() {
        if q == new.len() || (p < old.len() && old[p].0 < new[q].0) {
            col_rows[old[p].0].remove(&i);
            p += 1;
        } else if p == old.len() || new[q].0 < old[p].0 {
            col_rows[new[q].0].insert(i);
            q += 1;
        } else {
            p += 1;
            q += 1;
        }
    }
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    row_echelon(m).rank()
}

/// Kernel of a matrix together with its rank.
#[derive(Clone)]
pub struct Kernel<T> {
    pub basis: Subspace<T>,
    pub rank: usize,
}

impl<T: Field> std::fmt::Debug for Kernel<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Kernel").field("basis", &self.basis).field("rank", &self.rank).finish()
    }
}

/// Basis of `{x : m x = 0}` in reduced column echelon form, and `rank(m)`.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Kernel<T> {
    let ech = row_echelon(m);
    let rank = ech.rank();
    let basis = Subspace::from_vectors(m.ncols(), ech.kernel_vectors());
    Kernel { basis, rank }
}

/// Column space of `m` in canonical form.
pub fn column_space<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    Subspace::from_vectors(m.nrows(), m.columns().to_vec())
}

/// Solves `b * c = w` for `c`, where `b` has independent columns.
///
/// Fails with [`Error::NotInSpan`] when a column of `w` lies outside the
/// column span of `b`, and with [`Error::DependentColumns`] when `b` does not
/// have full column rank.
pub fn solve_in_span<T: Field>(b: &Matrix<T>, w: &Matrix<T>) -> Result<Matrix<T>> {
    if b.nrows() != w.nrows() {
        return Err(Error::DimensionMismatch(format!("basis has {} rows, targets {}", b.nrows(), w.nrows())));
    }
    let k = b.ncols();
    let aug = Matrix::hstack(&[b, w])?;
    let mut rows: Vec<SparseVec<T>> = aug.to_sparse_rows();
    let mut pivot_rows: Vec<SparseVec<T>> = Vec::with_capacity(k);
    for c in 0..k {
        let candidate = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.first().is_some_and(|(j, _)| *j == c))
            .min_by_key(|(i, r)| (r.len(), *i))
            .map(|(i, _)| i);
        let Some(p) = candidate else {
            return Err(Error::DependentColumns);
        };
        let prow = rows.swap_remove(p);
        let pval = prow[0].1.clone();
        for r in rows.iter_mut() {
            if let Some((j, a)) = r.first() {
                if *j == c {
                    let factor = -(a.clone() / pval.clone());
                    *r = axpy(r, &factor, &prow);
                }
            }
        }
        pivot_rows.push(prow);
    }
    if let Some(bad) = rows.iter().find(|r| !r.is_empty()) {
        return Err(Error::NotInSpan(format!("residual equation touches target column {}", bad[0].0 - k)));
    }
    // Back substitution, all right-hand sides at once.
    let nw = w.ncols();
    let mut sol: Vec<Vec<T>> = vec![vec![T::zero(); nw]; k];
    for c in (0..k).rev() {
        let row = &pivot_rows[c];
        let pval = row[0].1.clone();
        let mut rhs: Vec<T> = vec![T::zero(); nw];
        for (j, a) in row.iter().skip(1) {
            if *j < k {
                for t in 0..nw {
                    if !sol[*j][t].is_zero() {
                        rhs[t] = rhs[t].clone() - a.clone() * sol[*j][t].clone();
                    }
                }
            } else {
                rhs[j - k] = rhs[j - k].clone() + a.clone();
            }
        }
        sol[c] = rhs.into_iter().map(|x| x / pval.clone()).collect();
    }
    let cols = (0..nw)
        .map(|t| (0..k).filter(|&i| !sol[i][t].is_zero()).map(|i| (i, sol[i][t].clone())).collect())
        .collect();
    Ok(Matrix::from_columns(k, cols))
}

/// Inverse of a square matrix.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    solve_in_span(m, &Matrix::identity(m.nrows())).map_err(|_| Error::Singular)
}

/// Determinant by elimination.
pub fn determinant<T: Field>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    let mut a = m.to_dense();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pval = a[c][c].clone();
        det = det * pval.clone();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c].clone() / pval.clone();
                for j in c..n {
                    let v = a[c][j].clone();
                    a[i][j] = a[i][j].clone() - f.clone() * v;
                }
            }
        }
    }
    det
}

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term upwards (monic, degree n), by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial<T: Field>(m: &Matrix<T>) -> Vec<T> {
    assert!(m.is_square());
    let n = m.nrows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut mk = Matrix::<T>::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let shifted = Matrix::identity(n).scale(&coeffs[n - k + 1]);
        mk = m.compose(&mk).add(&shifted).unwrap();
        let t = m.compose(&mk).trace();
        coeffs[n - k] = -t / T::from_int(k as i64);
    }
    coeffs
}
