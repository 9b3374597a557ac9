use std::collections::HashMap;

use super::lie::{expand_left_normed, lie_words, rewrite_left_normed, Word};
use crate::error::Result;
use crate::exactalg::matrix::normalize;
use crate::exactalg::{Field, Permutation, SparseVec};
use crate::funcalc::Representation;
use crate::{QMatrix, Rational};

/// Multilinear weight-`n` part of `Lie^{x r}`, or of `V x Lie^{x r}` when
/// `with_v` is set. A basis element is one word per factor: the single `V`
/// letter first when present, then a left-normed basis word per Lie slot.
/// `S_n` relabels letters, `S_r` permutes the Lie slots.
#[derive(Clone, Debug)]
pub struct LieTensorSpace {
    n: usize,
    r: usize,
    with_v: bool,
    elements: Vec<Vec<Word>>,
    index: HashMap<Vec<Word>, usize>,
}

impl LieTensorSpace {
    pub fn new(r: usize, n: usize, with_v: bool) -> Self {
        assert!(n <= 32, "at most 32 letters");
        let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut elements = Vec::new();
        if with_v {
            for v in 0..n as u8 {
                fill(r, all & !(1 << v), &mut vec![vec![v]], &mut elements);
            }
        } else {
            fill(r, all, &mut Vec::new(), &mut elements);
        }
        elements.sort();
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        LieTensorSpace { n, r, with_v, elements, index }
    }

    pub fn weight(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> usize {
        self.r
    }

    pub fn with_v(&self) -> bool {
        self.with_v
    }

    pub fn elements(&self) -> &[Vec<Word>] {
        &self.elements
    }

    pub fn element(&self, j: usize) -> &[Word] {
        &self.elements[j]
    }

    pub fn index_of(&self, e: &[Word]) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// The Lie slot words of element `j`, without the `V` letter.
    pub fn lie_part(&self, j: usize) -> &[Word] {
        let e = &self.elements[j];
        if self.with_v {
            &e[1..]
        } else {
            e
        }
    }

    /// Sizes of the Lie slots of element `j`.
    pub fn slot_sizes(&self, j: usize) -> Vec<usize> {
        self.lie_part(j).iter().map(Vec::len).collect()
    }
}

fn fill(slots_left: usize, free: u32, prefix: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
    if slots_left == 0 {
        if free == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let count = free.count_ones() as usize;
    if count < slots_left {
        return;
    }
    // nonempty submasks of `free`
    let mut sub = free;
    while sub != 0 {
        let size = sub.count_ones() as usize;
        if (slots_left > 1 || sub == free) && count - size >= slots_left - 1 {
            let letters: Vec<u8> = (0..32u8).filter(|&i| sub >> i & 1 == 1).collect();
            for w in lie_words(&letters) {
                prefix.push(w);
                fill(slots_left - 1, free & !sub, prefix, out);
                prefix.pop();
            }
        }
        sub = (sub - 1) & free;
    }
}

impl Representation for LieTensorSpace {
    fn dim(&self) -> usize {
        self.elements.len()
    }

    fn letter_degree(&self) -> usize {
        self.n
    }

    fn slot_degree(&self) -> usize {
        self.r
    }

    fn act(&self, sigma: &Permutation, pi: &Permutation, j: usize) -> SparseVec<Rational> {
        let e = &self.elements[j];
        let offset = usize::from(self.with_v);
        // each factor becomes a combination of basis words
        let mut factors: Vec<Vec<(Word, i64)>> = Vec::with_capacity(e.len());
        for (s, w) in e.iter().enumerate() {
            let relabelled: Word = w.iter().map(|&x| sigma.apply(x as usize) as u8).collect();
            if s < offset {
                factors.push(vec![(relabelled, 1)]);
            } else {
                factors.push(rewrite_left_normed(&relabelled));
            }
        }
        let mut target: Vec<Word> = vec![Vec::new(); e.len()];
        let mut out = Vec::new();
        let mut combo = vec![0usize; factors.len()];
        'outer: loop {
            let mut coeff = 1;
            for (s, f) in factors.iter().enumerate() {
                let (w, c) = &f[combo[s]];
                coeff *= c;
                let t = if s < offset { s } else { offset + pi.apply(s - offset) };
                target[t] = w.clone();
            }
            out.push((self.index[&target], Rational::from_int(coeff)));
            for s in (0..factors.len()).rev() {
                combo[s] += 1;
                if combo[s] < factors[s].len() {
                    continue 'outer;
                }
                combo[s] = 0;
            }
            break;
        }
        normalize(out)
    }
}

/// `[x, L]` for a letter `x` and a left-normed basis word `L` not containing
/// it, in the basis of the combined letter set.
pub fn bracket_letter(x: u8, w: &[u8]) -> Vec<(Word, i64)> {
    if x > w[0] {
        let mut u = w.to_vec();
        u.push(x);
        return vec![(u, -1)];
    }
    expand_left_normed(w)
        .into_iter()
        .map(|(u, c)| {
            let mut v = Vec::with_capacity(u.len() + 1);
            v.push(x);
            v.extend(u);
            (v, c)
        })
        .collect()
}

/// The differential `V x Lie^{x r} -> Lie^{x r}` in weight `n`, sending
/// `x x L_1 x .. x L_r` to the sum over `i` of `[x, L_i]` in slot `i`.
#[derive(Clone, Debug)]
pub struct Adbar {
    pub r: usize,
    pub n: usize,
    pub domain: LieTensorSpace,
    pub codomain: LieTensorSpace,
    pub matrix: QMatrix,
    /// The domain is empty (`n <= r`): the matrix has no columns.
    pub degenerate: bool,
}

pub fn adbar_matrix(r: usize, n: usize) -> Adbar {
    let domain = LieTensorSpace::new(r, n, true);
    let codomain = LieTensorSpace::new(r, n, false);
    let mut triplets = Vec::new();
    for (j, e) in domain.elements().iter().enumerate() {
        let x = e[0][0];
        for i in 1..e.len() {
            for (w, c) in bracket_letter(x, &e[i]) {
                let mut target: Vec<Word> = e[1..].to_vec();
                target[i - 1] = w;
                triplets.push((codomain.index[&target], j, Rational::from_int(c)));
            }
        }
    }
    let matrix = QMatrix::from_triplets(codomain.dim(), domain.dim(), triplets);
    let degenerate = domain.dim() == 0;
    Adbar { r, n, domain, codomain, matrix, degenerate }
}

/// A component of a map onto a subset of codomain basis vectors.
#[derive(Clone, Debug)]
pub struct ComponentMap {
    pub rows: Vec<usize>,
    pub matrix: QMatrix,
}

fn component(ad: &Adbar, keep: impl Fn(&[usize]) -> bool) -> ComponentMap {
    let rows: Vec<usize> = (0..ad.codomain.dim()).filter(|&i| keep(&ad.codomain.slot_sizes(i))).collect();
    ComponentMap { matrix: ad.matrix.select_rows(&rows), rows }
}

/// The component of the weight `r + 2` differential landing in the blocks
/// with one weight-3 Lie slot.
pub fn delta_prime(r: usize) -> Result<ComponentMap> {
    let ad = adbar_matrix(r, r + 2);
    Ok(component(&ad, |sizes| sizes.contains(&3)))
}

/// The component landing in the blocks with two weight-2 Lie slots.
pub fn delta_doubleprime(r: usize) -> Result<ComponentMap> {
    let ad = adbar_matrix(r, r + 2);
    Ok(component(&ad, |sizes| sizes.iter().filter(|&&s| s == 2).count() == 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{kernel_basis, Partition};
    use crate::funcalc::{full_bimodule_character, full_character, subrep_bimodule_character, subrep_character};
    use crate::symchar::{ClassFunction, Multiplicity};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(LieTensorSpace::new(1, 3, false).dim(), 2);
        assert_eq!(LieTensorSpace::new(5, 7, true).dim(), 12600);
        assert_eq!(LieTensorSpace::new(5, 7, false).dim(), 21000);
        assert_eq!(LieTensorSpace::new(0, 0, false).dim(), 1);
        assert_eq!(LieTensorSpace::new(0, 1, true).dim(), 1);
        assert_eq!(LieTensorSpace::new(3, 2, false).dim(), 0);
    }

    #[test]
    fn lie_three_is_the_two_one_module() {
        let s = LieTensorSpace::new(1, 3, false);
        assert_eq!(full_character(&s), ClassFunction::irreducible(&p(&[2, 1])));
    }

    #[test]
    fn action_is_a_homomorphism() {
        let s = LieTensorSpace::new(2, 5, true);
        let g = Permutation::from_cycles(5, &[&[1, 3, 2], &[4, 5]]).unwrap();
        let h = Permutation::from_cycles(5, &[&[1, 5]]).unwrap();
        let a = Permutation::transposition(2, 0, 1);
        let id = Permutation::identity(2);
        let lhs = s.matrix(&g.compose(&h).unwrap(), &id);
        assert_eq!(lhs, s.matrix(&g, &id).compose(&s.matrix(&h, &id)));
        let both = s.matrix(&g, &a);
        assert_eq!(both, s.matrix(&g, &id).compose(&s.matrix(&Permutation::identity(5), &a)));
    }

    #[test]
    fn small_kernels() {
        let ad = adbar_matrix(1, 2);
        let k = kernel_basis(&ad.matrix);
        assert_eq!(k.basis.dim(), 1);
        let ad = adbar_matrix(2, 3);
        let k = kernel_basis(&ad.matrix).basis;
        let chi = subrep_bimodule_character(&ad.domain, &k).unwrap();
        assert_eq!(chi.decompose().unwrap(), vec![Multiplicity { lambda: p(&[3]), mu: p(&[2]), mult: 1 }]);
        let ad = adbar_matrix(1, 3);
        let k = kernel_basis(&ad.matrix).basis;
        assert_eq!(subrep_character(&ad.domain, &k).unwrap(), ClassFunction::irreducible(&p(&[1, 1, 1])));
        assert!(adbar_matrix(3, 2).degenerate);
        assert_eq!(adbar_matrix(3, 2).matrix.ncols(), 0);
    }

    #[test]
    fn adbar_is_equivariant() {
        for (r, n) in [(1, 4), (2, 4), (3, 5), (4, 6)] {
            let ad = adbar_matrix(r, n);
            let gens = [
                (Permutation::transposition(n, 0, 1), Permutation::identity(r)),
                (Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap(), Permutation::identity(r)),
                (Permutation::identity(n), Permutation::from_images((0..r).map(|i| (i + 1) % r).collect()).unwrap()),
            ];
            for (s, t) in gens {
                let lhs = ad.matrix.compose(&ad.domain.matrix(&s, &t));
                let rhs = ad.codomain.matrix(&s, &t).compose(&ad.matrix);
                assert_eq!(lhs, rhs, "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn euler_relation_on_full_spaces() {
        let ad = adbar_matrix(2, 4);
        let dom = full_bimodule_character(&ad.domain);
        assert_eq!(dom.dimension(), Rational::from_int(ad.domain.dim() as i64));
    }

    #[test]
    fn components_partition_the_rows() {
        let ad = adbar_matrix(3, 5);
        let d1 = delta_prime(3).unwrap();
        let d2 = delta_doubleprime(3).unwrap();
        assert_eq!(d1.rows.len() + d2.rows.len(), ad.codomain.dim());
        assert_eq!(d1.rows.len(), 3 * 10 * 2 * 2);
        assert_eq!(d2.rows.len(), 3 * 30);
    }
}
