use std::collections::HashMap;

use super::shape::{FunctorShape, SlotKind};
use crate::error::{Error, Result};
use crate::exactalg::Permutation;
use crate::{QMatrix, Rational};

/// Letters of one slot, as a bit mask over `{0, .., n-1}`.
pub type Mask = u32;

/// Letter assignment for every slot of a shape.
pub type Element = Vec<Mask>;

pub const MAX_LETTERS: usize = 32;

/// Basis of the multilinear component of a shape on letters `{0, .., n-1}`,
/// `n` the total degree.
///
/// An element assigns a letter set to each slot; wedge slots read their set in
/// increasing order, divided power slots hold the full symmetrization of their
/// set (with no `1/k!`). Elements are listed in lexicographic order of the
/// slot contents.
#[derive(Clone, Debug)]
pub struct MultilinearBasis {
    shape: FunctorShape,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
}

impl MultilinearBasis {
    pub fn new(shape: &FunctorShape) -> Result<Self> {
        let n = shape.total_degree();
        if n > MAX_LETTERS {
            return Err(Error::InvalidArgument(format!("{n} letters exceeds the supported {MAX_LETTERS}")));
        }
        let mut elements = Vec::new();
        let all: Mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        fill(shape, 0, all, &mut Vec::with_capacity(shape.len()), &mut elements);
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(MultilinearBasis { shape: shape.clone(), elements, index })
    }

    /// Checked variant taking the letter count explicitly.
    pub fn with_letters(shape: &FunctorShape, n: usize) -> Result<Self> {
        if n != shape.total_degree() {
            return Err(Error::DegreeMismatch(n, shape.total_degree()));
        }
        Self::new(shape)
    }

    pub fn shape(&self) -> &FunctorShape {
        &self.shape
    }

    pub fn letters(&self) -> usize {
        self.shape.total_degree()
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, j: usize) -> &Element {
        &self.elements[j]
    }

    pub fn index_of(&self, e: &[Mask]) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Image of element `j` under relabelling letters by `sigma`: an element
    /// index and a sign.
    pub fn act_letters(&self, sigma: &Permutation, j: usize) -> (usize, i64) {
        let mut sign = 1;
        let image: Element = self.elements[j]
            .iter()
            .zip(self.shape.slots())
            .map(|(&m, slot)| {
                let (img, s) = relabel_mask(m, sigma);
                if slot.kind == SlotKind::Wedge {
                    sign *= s;
                }
                img
            })
            .collect();
        (self.index[&image], sign)
    }

    /// Image of element `j` under moving slot `s` to slot `pi(s)`. The caller
    /// guarantees that `pi` preserves the shape.
    pub fn act_slots_unchecked(&self, pi: &Permutation, j: usize) -> usize {
        self.index[&permute_slots(&self.elements[j], pi)]
    }

    pub fn letter_action(&self, sigma: &Permutation) -> Result<QMatrix> {
        if sigma.degree() != self.letters() {
            return Err(Error::DegreeMismatch(sigma.degree(), self.letters()));
        }
        Ok(QMatrix::from_triplets(
            self.dim(),
            self.dim(),
            (0..self.dim()).map(|j| {
                let (i, s) = self.act_letters(sigma, j);
                (i, j, Rational::from_integer(s.into()))
            }),
        ))
    }

    /// Permutation matrix of moving slot `s` to slot `pi(s)`; `pi` may only
    /// exchange slots of the same kind and degree.
    pub fn slot_action(&self, pi: &Permutation) -> Result<QMatrix> {
        if self.shape.permuted(pi)? != self.shape {
            return Err(Error::InvalidSlot(format!("{pi} does not preserve {}", self.shape)));
        }
        Ok(QMatrix::from_triplets(
            self.dim(),
            self.dim(),
            (0..self.dim()).map(|j| (self.act_slots_unchecked(pi, j), j, Rational::from_integer(1.into()))),
        ))
    }
}

fn fill(shape: &FunctorShape, slot: usize, free: Mask, prefix: &mut Element, out: &mut Vec<Element>) {
    if slot == shape.len() {
        out.push(prefix.clone());
        return;
    }
    let k = shape.slots()[slot].degree;
    for m in subsets_lex(free, k) {
        prefix.push(m);
        fill(shape, slot + 1, free & !m, prefix, out);
        prefix.pop();
    }
}

/// The `k`-element subsets of `free`, in lexicographic order of their sorted
/// letter lists.
pub fn subsets_lex(free: Mask, k: usize) -> Vec<Mask> {
    fn rec(letters: &[u32], k: usize, start: usize, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=letters.len() - k {
            rec(letters, k - 1, i + 1, acc | (1 << letters[i]), out);
        }
    }
    let letters = mask_letters(free);
    let mut out = Vec::new();
    if k <= letters.len() {
        rec(&letters, k, 0, 0, &mut out);
    }
    out
}

/// Letters of a mask in increasing order.
pub fn mask_letters(m: Mask) -> Vec<u32> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    let mut rest = m;
    while rest != 0 {
        out.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    out
}

/// Sign of the permutation sorting the concatenation of the given letter
/// sequences (each already increasing).
pub fn shuffle_sign(parts: &[Mask]) -> i64 {
    let mut inversions = 0u32;
    let mut seen: Mask = 0;
    for &m in parts {
        for a in mask_letters(m) {
            // earlier letters larger than a
            inversions += (seen >> a).count_ones();
        }
        seen |= m;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Applies `sigma` to the letters of `m`; the sign is that of sorting the
/// relabelled increasing sequence.
pub fn relabel_mask(m: Mask, sigma: &Permutation) -> (Mask, i64) {
    let images: Vec<usize> = mask_letters(m).into_iter().map(|a| sigma.apply(a as usize)).collect();
    let mut inversions = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inversions += 1;
            }
        }
    }
    let mask = images.iter().fold(0, |acc, &a| acc | (1 << a));
    (mask, if inversions % 2 == 0 { 1 } else { -1 })
}

pub fn permute_slots(e: &[Mask], pi: &Permutation) -> Element {
    let mut out = e.to_vec();
    for (s, &m) in e.iter().enumerate() {
        out[pi.apply(s)] = m;
    }
    out
}

/// Rewrites `m`, a mask over the positions of `letters`, in terms of the
/// letters themselves.
pub fn spread(m: Mask, letters: &[u32]) -> Mask {
    mask_letters(m).into_iter().fold(0, |acc, i| acc | (1 << letters[i as usize]))
}

/// Inverse of [`spread`]: positions of the letters of `m` within `union`.
pub fn compress(m: Mask, union: Mask) -> Mask {
    let mut out = 0;
    let mut pos = 0;
    let mut rest = union;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        if m & bit != 0 {
            out |= 1 << pos;
        }
        pos += 1;
        rest &= rest - 1;
    }
    out
}
