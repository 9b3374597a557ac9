use num_traits::Zero;

use super::basis::{compress, mask_letters, permute_slots, shuffle_sign, spread, subsets_lex, Element, Mask, MultilinearBasis};
use super::shape::{FunctorShape, Slot};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Permutation};
use crate::{QMatrix, Rational};

/// A natural transformation between two shapes, as its matrix on the
/// multilinear bases over `n = total degree` letters.
#[derive(Clone, Debug, PartialEq)]
pub struct NaturalMap {
    pub domain: FunctorShape,
    pub codomain: FunctorShape,
    pub matrix: QMatrix,
}

impl NaturalMap {
    pub fn identity(shape: &FunctorShape) -> Result<Self> {
        let dim = MultilinearBasis::new(shape)?.dim();
        Ok(NaturalMap { domain: shape.clone(), codomain: shape.clone(), matrix: QMatrix::identity(dim) })
    }

    /// Builds the map element by element: `f` sends a domain element to a
    /// list of (codomain element, coefficient).
    pub fn from_fn(
        domain: &FunctorShape,
        codomain: &FunctorShape,
        mut f: impl FnMut(&[Mask]) -> Vec<(Element, i64)>,
    ) -> Result<Self> {
        if domain.total_degree() != codomain.total_degree() {
            return Err(Error::DegreeMismatch(domain.total_degree(), codomain.total_degree()));
        }
        let db = MultilinearBasis::new(domain)?;
        let cb = MultilinearBasis::new(codomain)?;
        let mut triplets = Vec::new();
        for (j, e) in db.elements().iter().enumerate() {
            for (img, c) in f(e) {
                let i = cb.index_of(&img).ok_or_else(|| Error::InvalidSlot(format!("{img:?} is not an element of {codomain}")))?;
                triplets.push((i, j, Rational::from_int(c)));
            }
        }
        Ok(NaturalMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: QMatrix::from_triplets(cb.dim(), db.dim(), triplets),
        })
    }

    /// `next` after `self`.
    pub fn then(&self, next: &NaturalMap) -> Result<NaturalMap> {
        if self.codomain != next.domain {
            return Err(Error::InvalidSlot(format!("cannot follow {} by a map from {}", self.codomain, next.domain)));
        }
        Ok(NaturalMap { domain: self.domain.clone(), codomain: next.codomain.clone(), matrix: next.matrix.mul(&self.matrix)? })
    }

    pub fn scale(&self, s: &Rational) -> NaturalMap {
        NaturalMap { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix: self.matrix.scale(s) }
    }

    pub fn add(&self, other: &NaturalMap) -> Result<NaturalMap> {
        if (&self.domain, &self.codomain) != (&other.domain, &other.codomain) {
            return Err(Error::InvalidSlot("adding maps between different shapes".into()));
        }
        Ok(NaturalMap { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix: self.matrix.add(&other.matrix)? })
    }

    /// Image of one domain element as (codomain element, coefficient) pairs.
    pub fn apply(&self, e: &[Mask]) -> Result<Vec<(Element, Rational)>> {
        let db = MultilinearBasis::new(&self.domain)?;
        let cb = MultilinearBasis::new(&self.codomain)?;
        let j = db.index_of(e).ok_or_else(|| Error::InvalidSlot(format!("{e:?} is not an element of {}", self.domain)))?;
        let mut out: Vec<(Element, Rational)> =
            self.matrix.column(j).iter().map(|(i, x)| (cb.element(*i).clone(), x.clone())).collect();
        out.sort();
        Ok(out)
    }

    /// Moves slot `s` of `shape` to slot `pi(s)`, without signs.
    pub fn slot_permutation(shape: &FunctorShape, pi: &Permutation) -> Result<Self> {
        let codomain = shape.permuted(pi)?;
        NaturalMap::from_fn(shape, &codomain, |e| vec![(permute_slots(e, pi), 1)])
    }

    /// Applies this map at the slots `at` of `big`, identity elsewhere.
    ///
    /// When domain and codomain have the same number of slots the codomain
    /// slots replace the designated ones in place; otherwise `at` must be
    /// contiguous and the codomain slots are spliced in. Letters are matched
    /// to the map's standard letters in increasing order.
    pub fn embed(&self, big: &FunctorShape, at: &[usize]) -> Result<NaturalMap> {
        let k = self.domain.len();
        if at.len() != k || at.windows(2).any(|w| w[0] >= w[1]) || at.last().is_some_and(|&s| s >= big.len()) {
            return Err(Error::InvalidSlot(format!("slots {at:?} of {big}")));
        }
        for (t, &s) in at.iter().enumerate() {
            if big.slots()[s] != self.domain.slots()[t] {
                return Err(Error::InvalidSlot(format!("slot {s} of {big} is not {}", self.domain.slots()[t])));
            }
        }
        let in_place = self.codomain.len() == k;
        if !in_place && at.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::InvalidSlot(format!("slots {at:?} must be contiguous to change the slot count")));
        }
        let codomain = if in_place {
            let mut slots: Vec<Slot> = big.slots().to_vec();
            for (t, &s) in at.iter().enumerate() {
                slots[s] = self.codomain.slots()[t];
            }
            FunctorShape::from_slots(slots)
        } else {
            let first = at.first().copied().unwrap_or(0);
            let mut slots: Vec<Slot> = big.slots()[..first].to_vec();
            slots.extend_from_slice(self.codomain.slots());
            slots.extend_from_slice(&big.slots()[first + k..]);
            FunctorShape::from_slots(slots)
        };
        let local_dom = MultilinearBasis::new(&self.domain)?;
        let local_cod = MultilinearBasis::new(&self.codomain)?;
        let db = MultilinearBasis::new(big)?;
        let cb = MultilinearBasis::new(&codomain)?;
        let mut triplets = Vec::new();
        for (j, e) in db.elements().iter().enumerate() {
            let union: Mask = at.iter().fold(0, |acc, &s| acc | e[s]);
            let letters = mask_letters(union);
            let local: Element = at.iter().map(|&s| compress(e[s], union)).collect();
            let lj = local_dom.index_of(&local).expect("local element");
            for (li, c) in self.matrix.column(lj) {
                let image: Vec<Mask> = local_cod.element(*li).iter().map(|&m| spread(m, &letters)).collect();
                let full: Element = if in_place {
                    let mut full = e.clone();
                    for (t, &s) in at.iter().enumerate() {
                        full[s] = image[t];
                    }
                    full
                } else {
                    let first = at.first().copied().unwrap_or(0);
                    let mut full = e[..first].to_vec();
                    full.extend_from_slice(&image);
                    full.extend_from_slice(&e[first + k..]);
                    full
                };
                triplets.push((cb.index_of(&full).expect("codomain element"), j, c.clone()));
            }
        }
        Ok(NaturalMap { domain: big.clone(), codomain, matrix: QMatrix::from_triplets(cb.dim(), db.dim(), triplets) })
    }
}

fn check_positive(degrees: &[usize]) -> Result<()> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::InvalidSlot(format!("degrees {degrees:?} must be positive")));
    }
    Ok(())
}

/// Iterated coproduct `Lambda^{d_1 + .. + d_k} -> Lambda^{d_1} x .. x Lambda^{d_k}`:
/// the unshuffle sum with Koszul signs.
pub fn wedge_coproduct_multi(degrees: &[usize]) -> Result<NaturalMap> {
    check_positive(degrees)?;
    let n: usize = degrees.iter().sum();
    let codomain = FunctorShape::new(degrees.iter().map(|&d| Slot::wedge(d)));
    NaturalMap::from_fn(&FunctorShape::wedge(n), &codomain, |e| {
        splits(e[0], degrees).into_iter().map(|parts| {
            let s = shuffle_sign(&parts);
            (parts, s)
        }).collect()
    })
}

/// `psi_{a,b}: Lambda^{a+b} -> Lambda^a x Lambda^b`.
pub fn wedge_coproduct(a: usize, b: usize) -> Result<NaturalMap> {
    wedge_coproduct_multi(&[a, b])
}

/// `mu_{a,b}: Lambda^a x Lambda^b -> Lambda^{a+b}`, sorting with sign.
pub fn wedge_product(a: usize, b: usize) -> Result<NaturalMap> {
    check_positive(&[a, b])?;
    let domain = FunctorShape::new([Slot::wedge(a), Slot::wedge(b)]);
    NaturalMap::from_fn(&domain, &FunctorShape::wedge(a + b), |e| vec![(vec![e[0] | e[1]], shuffle_sign(e))])
}

/// Iterated coproduct of divided powers: the sum over all splittings of the
/// letter set, without signs.
pub fn gamma_coproduct_multi(degrees: &[usize]) -> Result<NaturalMap> {
    check_positive(degrees)?;
    let n: usize = degrees.iter().sum();
    let codomain = FunctorShape::new(degrees.iter().map(|&d| Slot::divided(d)));
    NaturalMap::from_fn(&FunctorShape::divided(n), &codomain, |e| splits(e[0], degrees).into_iter().map(|p| (p, 1)).collect())
}

/// `Gamma^{a+b} -> Gamma^a x Gamma^b`; a zero degree gives the identity.
pub fn gamma_coproduct(a: usize, b: usize) -> Result<NaturalMap> {
    let degrees: Vec<usize> = [a, b].into_iter().filter(|&d| d > 0).collect();
    if degrees.len() == 1 {
        return NaturalMap::identity(&FunctorShape::divided(a + b));
    }
    gamma_coproduct_multi(&degrees)
}

/// The inclusion `Gamma^b -> T^b`.
pub fn gamma_to_tensor(b: usize) -> Result<NaturalMap> {
    gamma_coproduct_multi(&vec![1; b])
}

/// The de Rham differential `Lambda^a x Gamma^b -> Lambda^{a+1} x Gamma^{b-1}`:
/// split one letter off the divided power and multiply it into the wedge.
pub fn de_rham_d(a: usize, b: usize) -> Result<NaturalMap> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!("de Rham differential needs a, b >= 1 (got {a}, {b})")));
    }
    let domain = FunctorShape::new([Slot::wedge(a), Slot::divided(b)]);
    let split = gamma_coproduct(1, b - 1)?.embed(&domain, &[1])?;
    let multiply = wedge_product(a, 1)?.embed(&split.codomain, &[0, 1])?;
    split.then(&multiply)
}

/// Checks that `d` is characterised by the square: including `Gamma^b` into
/// `V x Gamma^{b-1}` and multiplying the letter into the wedge agrees with
/// `d` followed by the inclusion of `Gamma^{b-1}` into tensors.
pub fn de_rham_square_commutes(a: usize, b: usize) -> Result<bool> {
    let d = de_rham_d(a, b)?;
    let left = gamma_to_tensor(b)?.embed(&d.domain, &[1])?;
    let bottom = wedge_product(a, 1)?.embed(&left.codomain, &[0, 1])?;
    let top_then_right = if b > 1 { d.then(&gamma_to_tensor(b - 1)?.embed(&d.codomain, &[1])?)? } else { d };
    Ok(left.then(&bottom)? == top_then_right)
}

/// All ways to cut `letters` into consecutive blocks of the given sizes.
fn splits(letters: Mask, degrees: &[usize]) -> Vec<Element> {
    let mut out = Vec::new();
    fn rec(free: Mask, degrees: &[usize], prefix: &mut Element, out: &mut Vec<Element>) {
        let Some((&d, rest)) = degrees.split_first() else {
            out.push(prefix.clone());
            return;
        };
        for m in subsets_lex(free, d) {
            prefix.push(m);
            rec(free & !m, rest, prefix, out);
            prefix.pop();
        }
    }
    rec(letters, degrees, &mut Vec::new(), &mut out);
    out
}

/// True when every entry of the matrix is zero.
pub fn is_zero_map(m: &NaturalMap) -> bool {
    m.matrix.columns().iter().all(|c| c.iter().all(|(_, x)| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::kernel_basis;

    fn shape(s: &str) -> FunctorShape {
        s.parse().unwrap()
    }

    fn column_as_list(m: &NaturalMap, j: usize) -> Vec<(Vec<Vec<u32>>, Rational)> {
        let cb = MultilinearBasis::new(&m.codomain).unwrap();
        m.matrix
            .column(j)
            .iter()
            .map(|(i, c)| (cb.element(*i).iter().map(|&x| mask_letters(x)).collect(), c.clone()))
            .collect()
    }

    fn q(x: i64) -> Rational {
        Rational::from_int(x)
    }

    #[test]
    fn psi_three_one_explicit() {
        // x y z w = letters 0 1 2 3
        let psi = wedge_coproduct(3, 1).unwrap();
        let mut col = column_as_list(&psi, 0);
        col.sort();
        let mut expect = vec![
            (vec![vec![0, 1, 2], vec![3]], q(1)),
            (vec![vec![0, 1, 3], vec![2]], q(-1)),
            (vec![vec![0, 2, 3], vec![1]], q(1)),
            (vec![vec![1, 2, 3], vec![0]], q(-1)),
        ];
        expect.sort();
        assert_eq!(col, expect);
    }

    #[test]
    fn product_after_coproduct_is_four() {
        let psi = wedge_coproduct(3, 1).unwrap();
        let mu = wedge_product(3, 1).unwrap();
        assert_eq!(psi.then(&mu).unwrap().matrix, QMatrix::identity(1).scale(&q(4)));
    }

    #[test]
    fn gamma_split_of_two_letters() {
        let g = gamma_coproduct(1, 1).unwrap();
        assert_eq!(g.codomain, shape("T2"));
        assert_eq!(g.matrix, QMatrix::from_i64_rows(&[vec![1], vec![1]]));
    }

    #[test]
    fn embedding_rejects_bad_slots() {
        let mu = wedge_product(2, 1).unwrap();
        assert!(mu.embed(&shape("L2*L2*T1"), &[0, 2]).is_err());
        assert!(mu.embed(&shape("L2*L2*T1"), &[1, 0]).is_err());
        assert!(mu.embed(&shape("L2*L2*T1"), &[0, 1]).is_err());
        assert_eq!(mu.embed(&shape("L2*L2*T1"), &[1, 2]).unwrap().codomain, shape("L2*L3"));
    }

    #[test]
    fn de_rham_small_cases() {
        let d = de_rham_d(1, 1).unwrap();
        assert_eq!((d.domain.clone(), d.codomain.clone()), (shape("T2"), shape("L2")));
        let k = kernel_basis(&d.matrix);
        assert_eq!((k.basis.dim(), k.rank), (1, 1));
        let d = de_rham_d(3, 2).unwrap();
        assert_eq!((d.matrix.nrows(), d.matrix.ncols()), (5, 10));
        let k = kernel_basis(&d.matrix);
        assert_eq!((k.rank, k.basis.dim(), d.matrix.nrows() - k.rank), (4, 6, 1));
        assert!(de_rham_d(2, 0).is_err());
    }

    #[test]
    fn de_rham_square() {
        for a in 1..=4 {
            for b in 1..=4 {
                assert!(super::de_rham_square_commutes(a, b).unwrap(), "a={a} b={b}");
            }
        }
    }
}
