use std::collections::BTreeMap;

use super::elim::kernel_basis;
use super::field::Field;
use super::matrix::{axpy, scale_vec, Matrix, SparseVec};
use crate::error::{Error, Result};

/// A subspace of `T^ambient`, held as a basis in reduced column echelon form.
///
/// Column `k` has its first nonzero entry, equal to 1, at row `pivots[k]`;
/// pivots increase with `k`, and every other column vanishes at `pivots[k]`.
/// The form is unique for a given subspace, so equality of subspaces is
/// equality of this struct.
#[derive(Clone, PartialEq)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<SparseVec<T>>) -> Self {
        let reduced = rref_rows(vectors);
        let pivots = reduced.iter().map(|r| r[0].0).collect();
        Subspace { ambient, basis: Matrix::from_columns(ambient, reduced), pivots }
    }

    pub fn span_of_columns(m: &Matrix<T>) -> Self {
        Self::from_vectors(m.nrows(), m.columns().to_vec())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> &[SparseVec<T>] {
        self.basis.columns()
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &SparseVec<T>) -> Option<SparseVec<T>> {
        let mut coords: SparseVec<T> = Vec::new();
        let mut residual = v.clone();
        for (k, &p) in self.pivots.iter().enumerate() {
            if let Ok(pos) = v.binary_search_by_key(&p, |(i, _)| *i) {
                let c = v[pos].1.clone();
                residual = axpy(&residual, &-c.clone(), self.basis.column(k));
                coords.push((k, c));
            }
        }
        residual.is_empty().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace<T>) -> bool {
        self.ambient == other.ambient && other.vectors().iter().all(|v| self.contains(v))
    }

    /// Solves `basis * c = w`. Fails with `NotInSpan` when some column of `w`
    /// leaves the subspace.
    pub fn solve(&self, w: &Matrix<T>) -> Result<Matrix<T>> {
        if w.nrows() != self.ambient {
            return Err(Error::DimensionMismatch(format!("vectors of length {} in ambient {}", w.nrows(), self.ambient)));
        }
        let cols = w
            .columns()
            .iter()
            .enumerate()
            .map(|(j, v)| self.coordinates(v).ok_or_else(|| Error::NotInSpan(format!("column {j}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(), cols))
    }

    /// Matrix of a linear map restricted to this subspace, in this basis.
    /// `map` must send the subspace into itself.
    pub fn restrict(&self, map: &Matrix<T>) -> Result<Matrix<T>> {
        let images = map.mul(&self.basis)?;
        self.solve(&images).map_err(|e| match e {
            Error::NotInSpan(s) => Error::NotInvariant(s),
            e => e,
        })
    }

    pub fn sum(&self, other: &Subspace<T>) -> Result<Subspace<T>> {
        self.check_ambient(other)?;
        let mut vs = self.vectors().to_vec();
        vs.extend(other.vectors().iter().cloned());
        Ok(Subspace::from_vectors(self.ambient, vs))
    }

    pub fn intersect(&self, other: &Subspace<T>) -> Result<Subspace<T>> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // x = B1 a = B2 b  <=>  [B1 | -B2] (a, b) = 0
        let stacked = Matrix::hstack(&[&self.basis, &other.basis.neg()])?;
        let kernel = kernel_basis(&stacked);
        let k = self.dim();
        let vectors = kernel
            .basis
            .vectors()
            .iter()
            .map(|v| {
                let a: SparseVec<T> = v.iter().filter(|(i, _)| *i < k).cloned().collect();
                self.basis.mul_vec(&a)
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, vectors))
    }

    /// Image of this subspace under `map`.
    pub fn image(&self, map: &Matrix<T>) -> Result<Subspace<T>> {
        let images = map.mul(&self.basis)?;
        Ok(Subspace::span_of_columns(&images))
    }

    fn check_ambient(&self, other: &Subspace<T>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

impl<T: Field> std::fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Subspace").field("ambient", &self.ambient).field("pivots", &self.pivots).field("basis", &self.basis).finish()
    }
}

/// Reduced row echelon form of a set of sparse row vectors; zero rows are
/// dropped and the result is sorted by leading index.
pub fn rref_rows<T: Field>(rows: Vec<SparseVec<T>>) -> Vec<SparseVec<T>> {
    let mut reduced: BTreeMap<usize, SparseVec<T>> = BTreeMap::new();
    for row in rows {
        let mut v = row;
        // Eliminate existing pivot columns. Pivot rows vanish at each other's
        // pivot columns, so a single pass suffices.
        let hits: Vec<(usize, T)> =
            v.iter().filter(|(j, _)| reduced.contains_key(j)).map(|(j, x)| (*j, x.clone())).collect();
        for (j, x) in hits {
            v = axpy(&v, &-x, &reduced[&j]);
        }
        let Some((lead, lv)) = v.first().cloned() else {
            continue;
        };
        v = scale_vec(&v, &(T::one() / lv));
        for other in reduced.values_mut() {
            if let Ok(pos) = other.binary_search_by_key(&lead, |(i, _)| *i) {
                let x = other[pos].1.clone();
                *other = axpy(other, &-x, &v);
            }
        }
        reduced.insert(lead, v);
    }
    reduced.into_values().collect()
}
