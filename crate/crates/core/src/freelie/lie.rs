use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Permutation};
use crate::{QMatrix, Rational};

/// A word in the tensor algebra; letters are 0-based.
pub type Word = Vec<u8>;

/// A multilinear element of the tensor algebra: each word uses the same set
/// of letters exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<Word, Rational>,
}

impl TensorPoly {
    pub fn letter(x: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![x], Rational::from_int(1));
        TensorPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut out = TensorPoly::default();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        let entry = self.terms.entry(w.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Letters used, as a bit mask.
    pub fn support(&self) -> u64 {
        self.terms.keys().next().map(|w| w.iter().fold(0, |m, &x| m | 1 << x)).unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.terms.keys().next().map_or(0, Vec::len)
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> TensorPoly {
        TensorPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    /// Coordinates in the basis of words on `0..n` indexed by `Permutation::all(n)`.
    pub fn to_vector(&self, n: usize) -> Result<Vec<(usize, Rational)>> {
        let index = word_index(n);
        let mut v: Vec<(usize, Rational)> = self
            .terms
            .iter()
            .map(|(w, c)| index.get(w).map(|&i| (i, c.clone())).ok_or_else(|| Error::DimensionMismatch(format!("word {w:?} on {n} letters"))))
            .collect::<Result<_>>()?;
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }
}

/// The commutator `uv - vu`.
pub fn bracket(u: &TensorPoly, v: &TensorPoly) -> Result<TensorPoly> {
    if u.support() & v.support() != 0 {
        return Err(Error::OverlappingLetters);
    }
    let mut out = TensorPoly::default();
    for (a, x) in &u.terms {
        for (b, y) in &v.terms {
            let c = x * y;
            out.add_term([a.as_slice(), b].concat(), c.clone());
            out.add_term([b.as_slice(), a].concat(), -c);
        }
    }
    Ok(out)
}

/// Expansion of the left-normed bracket `[..[[w_1, w_2], w_3], .., w_k]` as
/// signed words; the words are distinct.
pub fn expand_left_normed(w: &[u8]) -> Vec<(Word, i64)> {
    let Some((&first, rest)) = w.split_first() else {
        return Vec::new();
    };
    let mut terms = vec![(vec![first], 1)];
    for &b in rest {
        let mut next = Vec::with_capacity(2 * terms.len());
        for (u, c) in terms {
            let mut left = u.clone();
            left.push(b);
            let mut right = Vec::with_capacity(u.len() + 1);
            right.push(b);
            right.extend_from_slice(&u);
            next.push((left, c));
            next.push((right, -c));
        }
        terms = next;
    }
    terms
}

/// Rewrites a left-normed bracket in the basis of left-normed brackets that
/// start with the smallest letter. The coordinate of such a basis element
/// is the coefficient of its own word in the expansion, because it is the
/// only basis element whose expansion contains a word starting with the
/// smallest letter followed by that order.
pub fn rewrite_left_normed(w: &[u8]) -> Vec<(Word, i64)> {
    let Some(&m) = w.iter().min() else {
        return Vec::new();
    };
    if w[0] == m {
        return vec![(w.to_vec(), 1)];
    }
    if w.len() == 2 {
        return vec![(vec![w[1], w[0]], -1)];
    }
    expand_left_normed(w).into_iter().filter(|(u, _)| u[0] == m).collect()
}

/// Basis words of the multilinear Lie component on `letters`: the smallest
/// letter first, the others in every order, lexicographically.
pub fn lie_words(letters: &[u8]) -> Vec<Word> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let Some((&m, rest)) = sorted.split_first() else {
        return Vec::new();
    };
    Permutation::all(rest.len())
        .into_iter()
        .map(|p| std::iter::once(m).chain(p.images().iter().map(|&i| rest[i])).collect())
        .collect()
}

fn word_index(n: usize) -> HashMap<Word, usize> {
    Permutation::all(n).iter().enumerate().map(|(i, p)| (p.images().iter().map(|&x| x as u8).collect(), i)).collect()
}

/// Left-normed basis of the multilinear part of the free Lie algebra on `n`
/// letters, as columns in the word basis of `T^n` ordered like
/// `Permutation::all(n)`.
#[derive(Clone, Debug)]
pub struct LieBasis {
    pub n: usize,
    pub words: Vec<Word>,
    pub vectors: QMatrix,
}

pub fn lie_basis(n: usize) -> Result<LieBasis> {
    if n == 0 {
        return Err(Error::InvalidArgument("the Lie basis needs weight at least 1".into()));
    }
    let letters: Vec<u8> = (0..n as u8).collect();
    let words = lie_words(&letters);
    let index = word_index(n);
    let columns = words
        .iter()
        .map(|w| {
            let mut col: Vec<(usize, Rational)> =
                expand_left_normed(w).into_iter().map(|(u, c)| (index[&u], Rational::from_int(c))).collect();
            col.sort_by_key(|(i, _)| *i);
            col
        })
        .collect();
    Ok(LieBasis { n, vectors: QMatrix::from_columns(index.len(), columns), words })
}

impl LieBasis {
    pub fn dim(&self) -> usize {
        self.words.len()
    }
}
