use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use super::basis::{mask_letters, permute_slots, relabel_mask, spread, subsets_lex, Element, Mask, MultilinearBasis};
use super::natural::NaturalMap;
use super::shape::{FunctorShape, SlotKind};
use crate::error::{Error, Result};
use crate::exactalg::matrix::Accumulator;
use crate::exactalg::{Partition, Permutation, SparseVec};
use crate::symchar::{BimoduleClassFunction, ClassFunction};
use crate::{QMatrix, QSubspace, Rational};

/// A finite dimensional representation of `S_n x S_r` with a chosen basis:
/// `S_n` relabels letters and `S_r` permutes slots.
pub trait Representation: Sync {
    fn dim(&self) -> usize;
    fn letter_degree(&self) -> usize;
    /// Degree of the slot group; 0 when only letters act.
    fn slot_degree(&self) -> usize;
    /// Image of basis vector `j` under `(sigma, pi)`.
    fn act(&self, sigma: &Permutation, pi: &Permutation, j: usize) -> SparseVec<Rational>;

    fn act_vector(&self, sigma: &Permutation, pi: &Permutation, v: &SparseVec<Rational>) -> SparseVec<Rational> {
        let mut acc = Accumulator::new(self.dim());
        for (j, c) in v {
            acc.add_scaled(&self.act(sigma, pi, *j), c);
        }
        acc.drain()
    }

    fn matrix(&self, sigma: &Permutation, pi: &Permutation) -> QMatrix {
        QMatrix::from_columns(self.dim(), (0..self.dim()).map(|j| self.act(sigma, pi, j)).collect())
    }
}

impl Representation for MultilinearBasis {
    fn dim(&self) -> usize {
        MultilinearBasis::dim(self)
    }

    fn letter_degree(&self) -> usize {
        self.letters()
    }

    fn slot_degree(&self) -> usize {
        0
    }

    fn act(&self, sigma: &Permutation, _pi: &Permutation, j: usize) -> SparseVec<Rational> {
        let (i, s) = self.act_letters(sigma, j);
        vec![(i, Rational::from_integer(s.into()))]
    }
}

/// Direct sum of the multilinear components of several shapes with a common
/// number `r` of slots, closed under permuting slot positions. `S_r` moves
/// slot `s` to slot `pi(s)`, carrying an element from one block to another.
#[derive(Clone, Debug)]
pub struct ShapeSum {
    blocks: Vec<MultilinearBasis>,
    offsets: Vec<usize>,
    block_of: HashMap<FunctorShape, usize>,
    slots: usize,
    letters: usize,
}

impl ShapeSum {
    pub fn new(shapes: &[FunctorShape]) -> Result<Self> {
        let first = shapes.first().ok_or_else(|| Error::InvalidArgument("empty sum of shapes".into()))?;
        let (slots, letters) = (first.len(), first.total_degree());
        let mut blocks = Vec::new();
        let mut offsets = Vec::new();
        let mut block_of = HashMap::new();
        let mut offset = 0;
        for (b, s) in shapes.iter().enumerate() {
            if s.len() != slots || s.total_degree() != letters {
                return Err(Error::InvalidSlot(format!("{s} does not match {first}")));
            }
            if block_of.insert(s.clone(), b).is_some() {
                return Err(Error::InvalidSlot(format!("{s} repeated")));
            }
            let basis = MultilinearBasis::new(s)?;
            offsets.push(offset);
            offset += basis.dim();
            blocks.push(basis);
        }
        offsets.push(offset);
        for s in shapes {
            for i in 0..slots.saturating_sub(1) {
                let moved = s.permuted(&Permutation::transposition(slots, i, i + 1))?;
                if !block_of.contains_key(&moved) {
                    return Err(Error::NotInvariant(format!("slot permutations send {s} to {moved}")));
                }
            }
        }
        Ok(ShapeSum { blocks, offsets, block_of, slots, letters })
    }

    /// The orbit of one shape under slot permutations, in decreasing order of
    /// the slot words.
    pub fn orbit(shape: &FunctorShape) -> Result<Self> {
        let r = shape.len();
        let mut orbit: Vec<FunctorShape> = Permutation::all(r).iter().map(|p| shape.permuted(p)).collect::<Result<_>>()?;
        orbit.sort();
        orbit.dedup();
        orbit.reverse();
        Self::new(&orbit)
    }

    pub fn blocks(&self) -> &[MultilinearBasis] {
        &self.blocks
    }

    pub fn block_offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn block_index(&self, shape: &FunctorShape) -> Option<usize> {
        self.block_of.get(shape).copied()
    }

    /// Block and in-block index of a global basis index.
    pub fn locate(&self, j: usize) -> (usize, usize) {
        let b = self.offsets.partition_point(|&o| o <= j) - 1;
        (b, j - self.offsets[b])
    }
}

impl Representation for ShapeSum {
    fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn letter_degree(&self) -> usize {
        self.letters
    }

    fn slot_degree(&self) -> usize {
        self.slots
    }

    fn act(&self, sigma: &Permutation, pi: &Permutation, j: usize) -> SparseVec<Rational> {
        let (b, local) = self.locate(j);
        let basis = &self.blocks[b];
        let mut sign = 1;
        let relabelled: Element = basis
            .element(local)
            .iter()
            .zip(basis.shape().slots())
            .map(|(&m, slot)| {
                let (img, s) = relabel_mask(m, sigma);
                if slot.kind == SlotKind::Wedge {
                    sign *= s;
                }
                img
            })
            .collect();
        let target_shape = basis.shape().permuted(pi).expect("slot degree");
        let tb = self.block_of[&target_shape];
        let image = permute_slots(&relabelled, pi);
        let i = self.offsets[tb] + self.blocks[tb].index_of(&image).expect("element");
        vec![(i, Rational::from_integer(sign.into()))]
    }
}

/// A linear map between two shape sums assembled from natural maps between
/// their blocks.
#[derive(Clone, Debug)]
pub struct BlockMap {
    pub domain: ShapeSum,
    pub codomain: ShapeSum,
    pub matrix: QMatrix,
}

impl BlockMap {
    pub fn new(domain: ShapeSum, codomain: ShapeSum, parts: &[NaturalMap]) -> Result<Self> {
        let mut triplets = Vec::new();
        for part in parts {
            let db = domain.block_index(&part.domain).ok_or_else(|| Error::InvalidSlot(format!("{} not in domain", part.domain)))?;
            let cb = codomain
                .block_index(&part.codomain)
                .ok_or_else(|| Error::InvalidSlot(format!("{} not in codomain", part.codomain)))?;
            let (ro, co) = (codomain.block_offset(cb), domain.block_offset(db));
            for (j, col) in part.matrix.columns().iter().enumerate() {
                for (i, x) in col {
                    triplets.push((ro + i, co + j, x.clone()));
                }
            }
        }
        let matrix = QMatrix::from_triplets(codomain.dim(), domain.dim(), triplets);
        Ok(BlockMap { domain, codomain, matrix })
    }
}

fn letter_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![Permutation::transposition(n, 0, 1), Permutation::from_images(cycle).unwrap()]
}

/// Checks that `sub` is stable under generators of both groups.
pub fn check_invariant<R: Representation + ?Sized>(rep: &R, sub: &QSubspace, with_slots: bool) -> Result<()> {
    if sub.ambient_dim() != rep.dim() {
        return Err(Error::AmbientMismatch(sub.ambient_dim(), rep.dim()));
    }
    let (n, r) = (rep.letter_degree(), rep.slot_degree());
    let mut gens: Vec<(Permutation, Permutation)> =
        letter_generators(n).into_iter().map(|g| (g, Permutation::identity(r))).collect();
    if with_slots {
        gens.extend(letter_generators(r).into_iter().map(|g| (Permutation::identity(n), g)));
    }
    for (sigma, pi) in gens {
        for (k, v) in sub.vectors().iter().enumerate() {
            if !sub.contains(&rep.act_vector(&sigma, &pi, v)) {
                return Err(Error::NotInvariant(format!("basis vector {k} under ({sigma}, {pi})")));
            }
        }
    }
    Ok(())
}

/// Trace of `(sigma, pi)` on an invariant subspace. In reduced column echelon
/// form the `k`-th coordinate of a vector in the span is its entry at the
/// `k`-th pivot, so no solve is needed.
pub fn trace_on<R: Representation + ?Sized>(rep: &R, sub: &QSubspace, sigma: &Permutation, pi: &Permutation) -> Rational {
    let mut total = Rational::zero();
    for (v, &p) in sub.vectors().iter().zip(sub.pivots()) {
        for (j, c) in v {
            for (i, x) in rep.act(sigma, pi, *j) {
                if i == p {
                    total += c * x;
                }
            }
        }
    }
    total
}

/// Character of the letter action on an invariant subspace.
pub fn subrep_character<R: Representation + ?Sized>(rep: &R, sub: &QSubspace) -> Result<ClassFunction> {
    check_invariant(rep, sub, false)?;
    let n = rep.letter_degree();
    let pi = Permutation::identity(rep.slot_degree());
    let values = Partition::all(n)
        .par_iter()
        .map(|mu| trace_on(rep, sub, &Permutation::class_representative(mu), &pi))
        .collect();
    ClassFunction::from_values(n, values)
}

/// Character of `S_n x S_r` on an invariant subspace.
pub fn subrep_bimodule_character<R: Representation + ?Sized>(rep: &R, sub: &QSubspace) -> Result<BimoduleClassFunction> {
    check_invariant(rep, sub, true)?;
    let (n, r) = (rep.letter_degree(), rep.slot_degree());
    let pairs: Vec<(Partition, Partition)> =
        Partition::all(n).into_iter().flat_map(|x| Partition::all(r).into_iter().map(move |y| (x.clone(), y))).collect();
    let values = pairs
        .par_iter()
        .map(|(x, y)| trace_on(rep, sub, &Permutation::class_representative(x), &Permutation::class_representative(y)))
        .collect();
    BimoduleClassFunction::from_values(n, r, values)
}

/// Character of the whole space, without any subspace bookkeeping.
pub fn full_bimodule_character<R: Representation + ?Sized>(rep: &R) -> BimoduleClassFunction {
    let (n, r) = (rep.letter_degree(), rep.slot_degree());
    BimoduleClassFunction::from_fn(n, r, |x, y| {
        let sigma = Permutation::class_representative(x);
        let pi = Permutation::class_representative(y);
        (0..rep.dim())
            .into_par_iter()
            .map(|j| rep.act(&sigma, &pi, j).into_iter().find(|(i, _)| *i == j).map(|(_, c)| c).unwrap_or_else(Rational::zero))
            .reduce(Rational::zero, |a, b| a + b)
    })
}

pub fn full_character<R: Representation + ?Sized>(rep: &R) -> ClassFunction {
    full_bimodule_character(rep).first_factor()
}

/// External tensor product of subspaces of two shapes, as a subspace of the
/// concatenated shape on `n1 + n2` letters: every way of choosing which
/// letters go to the first factor, relabelled in increasing order.
pub fn tensor_subspaces(
    first: (&FunctorShape, &QSubspace),
    second: (&FunctorShape, &QSubspace),
) -> Result<(FunctorShape, QSubspace)> {
    let (s1, v1) = first;
    let (s2, v2) = second;
    let b1 = MultilinearBasis::new(s1)?;
    let b2 = MultilinearBasis::new(s2)?;
    if v1.ambient_dim() != b1.dim() || v2.ambient_dim() != b2.dim() {
        return Err(Error::AmbientMismatch(v1.ambient_dim(), b1.dim()));
    }
    let shape = s1.concat(s2);
    let big = MultilinearBasis::new(&shape)?;
    let (n1, n) = (s1.total_degree(), shape.total_degree());
    let all: Mask = ((1u64 << n) - 1) as Mask;
    let mut vectors = Vec::new();
    for left in subsets_lex(all, n1) {
        let l1 = mask_letters(left);
        let l2 = mask_letters(all & !left);
        for x in v1.vectors() {
            for y in v2.vectors() {
                let mut acc = Accumulator::new(big.dim());
                for (i, a) in x {
                    for (j, b) in y {
                        let mut e: Element = b1.element(*i).iter().map(|&m| spread(m, &l1)).collect();
                        e.extend(b2.element(*j).iter().map(|&m| spread(m, &l2)));
                        acc.add(big.index_of(&e).expect("element"), a * b);
                    }
                }
                vectors.push(acc.drain());
            }
        }
    }
    Ok((shape, QSubspace::from_vectors(big.dim(), vectors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::kernel_basis;
    use crate::funcalc::natural::de_rham_d;
    use crate::symchar::Multiplicity;

    fn shape(s: &str) -> FunctorShape {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[(&[usize], u64)]) -> Vec<Multiplicity> {
        parts.iter().map(|(l, m)| Multiplicity { lambda: p(l), mu: Partition::empty(), mult: *m }).collect()
    }

    #[test]
    fn full_space_characters() {
        let b = MultilinearBasis::new(&shape("L3*T1")).unwrap();
        let chi = subrep_character(&b, &QSubspace::full(b.dim())).unwrap();
        assert_eq!(chi.decompose().unwrap(), single(&[(&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)]));
        assert_eq!(chi, full_character(&b));
        let b = MultilinearBasis::new(&shape("L2*L2")).unwrap();
        assert_eq!(full_character(&b).decompose().unwrap(), single(&[(&[2, 2], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)]));
        let b = MultilinearBasis::new(&shape("G3")).unwrap();
        assert_eq!(full_character(&b).decompose().unwrap(), single(&[(&[3], 1)]));
    }

    #[test]
    fn zero_subspace_has_zero_character() {
        let b = MultilinearBasis::new(&shape("L2*T2")).unwrap();
        assert!(subrep_character(&b, &QSubspace::zero(b.dim())).unwrap().is_zero());
    }

    #[test]
    fn kernel_of_d_is_a_hook() {
        let d = de_rham_d(3, 2).unwrap();
        let b = MultilinearBasis::new(&d.domain).unwrap();
        let k = kernel_basis(&d.matrix).basis;
        assert_eq!(subrep_character(&b, &k).unwrap().decompose().unwrap(), single(&[(&[3, 1, 1], 1)]));
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let b = MultilinearBasis::new(&shape("T2")).unwrap();
        let line = QSubspace::from_vectors(2, vec![vec![(0, Rational::from_integer(1.into()))]]);
        assert!(matches!(subrep_character(&b, &line), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn two_wedges_as_bimodule() {
        let sum = ShapeSum::orbit(&shape("L2*L2")).unwrap();
        let chi = full_bimodule_character(&sum);
        let d = chi.decompose().unwrap();
        let expect = vec![
            Multiplicity { lambda: p(&[2, 2]), mu: p(&[2]), mult: 1 },
            Multiplicity { lambda: p(&[2, 1, 1]), mu: p(&[1, 1]), mult: 1 },
            Multiplicity { lambda: p(&[1, 1, 1, 1]), mu: p(&[2]), mult: 1 },
        ];
        assert_eq!(d, expect);
    }

    #[test]
    fn orbits_and_block_lookup() {
        let sum = ShapeSum::orbit(&shape("L3*T2")).unwrap();
        assert_eq!(sum.blocks().len(), 3);
        assert_eq!(sum.blocks()[0].shape(), &shape("L3*T2"));
        assert_eq!(sum.dim(), 60);
        assert_eq!(sum.locate(25), (1, 5));
        assert!(ShapeSum::new(&[shape("L3*T2")]).is_err());
    }

    #[test]
    fn tensoring_with_a_letter() {
        let (s, v) = tensor_subspaces((&shape("L2"), &QSubspace::full(1)), (&shape("T1"), &QSubspace::full(1))).unwrap();
        assert_eq!(s, shape("L2*T1"));
        assert_eq!(v.dim(), 3);
    }
}
