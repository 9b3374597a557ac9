use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs, strictly increasing in index, no
/// stored zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Sparse matrix stored by columns.
///
/// Each column is a [`SparseVec`]; a stored entry is never zero. Two matrices
/// with the same shape and entries therefore compare equal structurally.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: Vec<SparseVec<T>>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: (0..n).map(|i| vec![(i, T::one())]).collect() }
    }

    /// Builds from sparse columns; entries are sorted, duplicates summed and
    /// zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec<T>>) -> Self {
        let cols = columns.into_iter().map(normalize).collect::<Vec<_>>();
        debug_assert!(cols.iter().all(|c| c.iter().all(|(r, _)| *r < rows)));
        Matrix { rows, cols }
    }

    /// Builds from row-major dense data.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged row data");
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    cols[j].push((i, v.clone()));
                }
            }
        }
        Matrix { rows: nrows, cols }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let conv: Vec<Vec<T>> = rows.iter().map(|r| r.iter().map(|&x| T::from_int(x)).collect()).collect();
        Self::from_rows(&conv)
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            columns[c].push((r, v));
        }
        Self::from_columns(rows, columns)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<T> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<T>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec<T>> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.cols[j].binary_search_by_key(&i, |(r, _)| *r) {
            Ok(k) => self.cols[j][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols.len()
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        Matrix { rows: self.cols.len(), cols }
    }

    /// Row-major copy of the nonzero pattern, one sparse row per matrix row.
    pub fn to_sparse_rows(&self) -> Vec<SparseVec<T>> {
        self.transpose().cols
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &SparseVec<T>) -> SparseVec<T> {
        let mut acc = Accumulator::new(self.rows);
        for (k, x) in v {
            acc.add_scaled(&self.cols[*k], x);
        }
        acc.drain()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.ncols(),
                other.rows,
                other.ncols()
            )));
        }
        let mut acc = Accumulator::new(self.rows);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                for (k, x) in col {
                    acc.add_scaled(&self.cols[*k], x);
                }
                acc.drain()
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols })
    }

    /// Product that panics on shape mismatch; for internal compositions whose
    /// shapes are fixed by construction.
    pub fn compose(&self, other: &Matrix<T>) -> Matrix<T> {
        self.mul(other).expect("composition of incompatible matrices")
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_same_shape(other)?;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(a, &T::one(), b)).collect();
        Ok(Matrix { rows: self.rows, cols })
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.check_same_shape(other)?;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(a, &-T::one(), b)).collect();
        Ok(Matrix { rows: self.rows, cols })
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.ncols());
        }
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, v.clone() * s.clone())).collect())
            .collect();
        Matrix { rows: self.rows, cols }
    }

    pub fn neg(&self) -> Matrix<T> {
        self.scale(&-T::one())
    }

    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = self.compose(&out);
        }
        out
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square(), "trace of a non-square matrix");
        self.cols.iter().enumerate().fold(T::zero(), |acc, (j, col)| {
            match col.binary_search_by_key(&j, |(r, _)| *r) {
                Ok(k) => acc + col[k].1.clone(),
                Err(_) => acc,
            }
        })
    }

    pub fn diagonal_is_zero(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, col)| col.binary_search_by_key(&j, |(r, _)| *r).is_err())
    }

    /// Places `blocks` side by side.
    pub fn hstack(blocks: &[&Matrix<T>]) -> Result<Matrix<T>> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::DimensionMismatch("hstack of blocks with different row counts".into()));
        }
        let cols = blocks.iter().flat_map(|b| b.cols.iter().cloned()).collect();
        Ok(Matrix { rows, cols })
    }

    /// Places `blocks` on top of each other.
    pub fn vstack(blocks: &[&Matrix<T>]) -> Result<Matrix<T>> {
        let ncols = blocks.first().map_or(0, |b| b.ncols());
        if blocks.iter().any(|b| b.ncols() != ncols) {
            return Err(Error::DimensionMismatch("vstack of blocks with different column counts".into()));
        }
        let mut cols = vec![Vec::new(); ncols];
        let mut offset = 0;
        for b in blocks {
            for (j, col) in b.cols.iter().enumerate() {
                cols[j].extend(col.iter().map(|(i, v)| (i + offset, v.clone())));
            }
            offset += b.rows;
        }
        Ok(Matrix { rows: offset, cols })
    }

    /// Keeps the listed rows, renumbered in the order given.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix<T> {
        let mut new_index = vec![usize::MAX; self.rows];
        for (k, r) in rows.iter().enumerate() {
            new_index[*r] = k;
        }
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let mut v: SparseVec<T> =
                    c.iter().filter(|(i, _)| new_index[*i] != usize::MAX).map(|(i, x)| (new_index[*i], x.clone())).collect();
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect();
        Matrix { rows: rows.len(), cols }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix<T> {
        Matrix { rows: self.rows, cols: cols.iter().map(|&j| self.cols[j].clone()).collect() }
    }

    /// Embeds this matrix as the block starting at `(row_offset, col_offset)`
    /// of a `rows x cols` zero matrix.
    pub fn embed(&self, rows: usize, cols: usize, row_offset: usize, col_offset: usize) -> Matrix<T> {
        assert!(row_offset + self.rows <= rows && col_offset + self.ncols() <= cols);
        let mut out = vec![Vec::new(); cols];
        for (j, c) in self.cols.iter().enumerate() {
            out[col_offset + j] = c.iter().map(|(i, v)| (i + row_offset, v.clone())).collect();
        }
        Matrix { rows, cols: out }
    }

    fn check_same_shape(&self, other: &Matrix<T>) -> Result<()> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows,
                self.ncols(),
                other.rows,
                other.ncols()
            )));
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.ncols())?;
        if self.rows <= 24 && self.ncols() <= 24 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}

/// Sorts, merges duplicates and drops zeros.
pub fn normalize<T: Field>(mut v: SparseVec<T>) -> SparseVec<T> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<T> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = y.clone() + x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// `a + s * b` for sorted sparse vectors.
pub fn axpy<T: Field>(a: &SparseVec<T>, s: &T, b: &SparseVec<T>) -> SparseVec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    while p < a.len() || q < b.len() {
        let take_a = q == b.len() || (p < a.len() && a[p].0 < b[q].0);
        let take_b = p == a.len() || (q < b.len() && b[q].0 < a[p].0);
        if take_a {
            out.push(a[p].clone());
            p += 1;
        } else if take_b {
            out.push((b[q].0, s.clone() * b[q].1.clone()));
            q += 1;
        } else {
            let x = a[p].1.clone() + s.clone() * b[q].1.clone();
            if !x.is_zero() {
                out.push((a[p].0, x));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

pub fn scale_vec<T: Field>(v: &SparseVec<T>, s: &T) -> SparseVec<T> {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x.clone() * s.clone())).collect()
}

/// Dense scratch space for accumulating sparse linear combinations.
pub struct Accumulator<T> {
    values: Vec<Option<T>>,
    touched: Vec<usize>,
}

impl<T: Field> Accumulator<T> {
    pub fn new(len: usize) -> Self {
        Accumulator { values: vec![None; len], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, x: T) {
        match &mut self.values[i] {
            Some(y) => *y = y.clone() + x,
            slot @ None => {
                *slot = Some(x);
                self.touched.push(i);
            }
        }
    }

    pub fn add_scaled(&mut self, v: &SparseVec<T>, s: &T) {
        for (i, x) in v {
            self.add(*i, x.clone() * s.clone());
        }
    }

    /// Returns the accumulated vector and resets the scratch space.
    pub fn drain(&mut self) -> SparseVec<T> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for i in self.touched.drain(..) {
            if let Some(x) = self.values[i].take() {
                if !x.is_zero() {
                    out.push((i, x));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn product_and_transpose() {
        let a = q(&[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = q(&[vec![1, 0, 1], vec![2, 1, 0]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, q(&[vec![5, 2, 1], vec![2, 1, 0], vec![3, 0, 3]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()).unwrap());
        assert!(b.mul(&b).is_err());
    }

    #[test]
    fn cancellation_leaves_no_stored_zeros() {
        let a = q(&[vec![1, -1]]);
        let b = q(&[vec![-1, 1]]);
        let s = a.add(&b).unwrap();
        assert!(s.is_zero());
        assert_eq!(s, Matrix::zeros(1, 2));
    }

    #[test]
    fn stacking() {
        let a = q(&[vec![1, 2]]);
        let b = q(&[vec![3, 4]]);
        assert_eq!(Matrix::vstack(&[&a, &b]).unwrap(), q(&[vec![1, 2], vec![3, 4]]));
        assert_eq!(Matrix::hstack(&[&a, &b]).unwrap(), q(&[vec![1, 2, 3, 4]]));
        assert_eq!(q(&[vec![1, 2], vec![3, 4]]).trace(), Rational::from_int(5));
    }
}
