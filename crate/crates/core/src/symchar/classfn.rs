use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::mn::irr_char;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Partition};
use crate::Rational;

/// Character table of `S_n`, rows and columns both in [`Partition::all`] order.
#[derive(Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }
}

pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables.read().unwrap().get(&n) {
        return t.clone();
    }
    let partitions = Partition::all(n);
    let values = partitions
        .iter()
        .map(|l| partitions.iter().map(|m| irr_char(l, m).expect("equal weights")).collect())
        .collect();
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(CharacterTable { n, partitions, values, index });
    tables.write().unwrap().entry(n).or_insert(table).clone()
}

/// One irreducible constituent with its multiplicity. For a single symmetric
/// group `mu` is the empty partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub lambda: Partition,
    pub mu: Partition,
    pub mult: u64,
}

pub type Decomposition = Vec<Multiplicity>;

/// Total dimension of a decomposition, `sum mult * dim(lambda) * dim(mu)`.
pub fn decomposition_dimension(d: &[Multiplicity]) -> u128 {
    d.iter().map(|m| m.mult as u128 * m.lambda.hook_dimension() * m.mu.hook_dimension()).sum()
}

fn z_inverse(mu: &Partition) -> Rational {
    Rational::new(1.into(), mu.centralizer_order().into())
}

fn as_multiplicity(x: &Rational, what: impl FnOnce() -> String) -> Result<u64> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::NotACharacter(format!("{} has multiplicity {x}", what())));
    }
    u64::try_from(x.to_integer()).map_err(|_| Error::NotACharacter(format!("{} multiplicity too large", what())))
}

/// A rational class function on `S_n`, values in [`Partition::all`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, values: vec![Rational::zero(); Partition::all(n).len()] }
    }

    pub fn from_fn(n: usize, f: impl FnMut(&Partition) -> Rational) -> Self {
        ClassFunction { n, values: Partition::all(n).iter().map(f).collect() }
    }

    pub fn from_values(n: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = Partition::all(n).len();
        if values.len() != expected {
            return Err(Error::DimensionMismatch(format!("{} values for {expected} classes", values.len())));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let t = character_table(lambda.weight());
        let row = &t.values[t.index_of(lambda).unwrap()];
        ClassFunction { n: t.n, values: row.iter().map(|&v| Rational::from_int(v)).collect() }
    }

    /// Character of the regular representation: `n!` at the identity, 0 elsewhere.
    pub fn regular(n: usize) -> Self {
        let fact: u128 = (1..=n as u128).product();
        Self::from_fn(n, |mu| if mu.parts().iter().all(|&p| p == 1) { Rational::from_integer(fact.into()) } else { Rational::zero() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, mu: &Partition) -> Rational {
        let t = character_table(self.n);
        self.values[t.index_of(mu).expect("partition of the right weight")].clone()
    }

    /// Value at the identity.
    pub fn dimension(&self) -> Rational {
        self.values.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> ClassFunction {
        ClassFunction { n: self.n, values: self.values.iter().map(|a| a * s).collect() }
    }

    /// Pointwise product: the character of the inner tensor product.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(ClassFunction { n: self.n, values })
    }

    /// `(1/n!) sum_g chi1(g) chi2(g)`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rational> {
        self.check(other)?;
        let t = character_table(self.n);
        Ok(t.partitions
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .fold(Rational::zero(), |acc, (mu, (a, b))| acc + a * b * z_inverse(mu)))
    }

    /// Restriction to `S_{n-1}`, the stabilizer of the last letter.
    pub fn restrict(&self) -> Result<ClassFunction> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("cannot restrict from S_0".into()));
        }
        Ok(ClassFunction::from_fn(self.n - 1, |mu| {
            let mut parts = mu.parts().to_vec();
            parts.push(1);
            self.value(&Partition::from_unsorted(parts))
        }))
    }

    /// Multiplicities of the irreducibles; fails unless all are nonnegative
    /// integers.
    pub fn decompose(&self) -> Result<Decomposition> {
        let t = character_table(self.n);
        let mut out = Vec::new();
        for lambda in &t.partitions {
            let m = self.inner(&ClassFunction::irreducible(lambda))?;
            let mult = as_multiplicity(&m, || lambda.to_string())?;
            if mult > 0 {
                out.push(Multiplicity { lambda: lambda.clone(), mu: Partition::empty(), mult });
            }
        }
        if Rational::from_integer(decomposition_dimension(&out).into()) != self.dimension() {
            return Err(Error::NotACharacter("multiplicities do not account for the dimension".into()));
        }
        Ok(out)
    }

    /// Sum of irreducible characters with the given multiplicities.
    pub fn from_decomposition(n: usize, d: &[Multiplicity]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(n);
        for m in d {
            if m.lambda.weight() != n {
                return Err(Error::DegreeMismatch(m.lambda.weight(), n));
            }
            acc = acc.add(&ClassFunction::irreducible(&m.lambda).scale(&Rational::from_int(m.mult as i64)))?;
        }
        Ok(acc)
    }
}

/// Character of `Ind_{S_a x S_b}^{S_{a+b}} (chi1 x chi2)`.
pub fn induce_outer(chi1: &ClassFunction, chi2: &ClassFunction) -> ClassFunction {
    let a = chi1.degree();
    ClassFunction::from_fn(a + chi2.degree(), |mu| {
        let z = mu.centralizer_order();
        let mut total = Rational::zero();
        for (mu1, mu2) in splittings(mu, a) {
            let coeff = Rational::new(z.into(), (mu1.centralizer_order() * mu2.centralizer_order()).into());
            total += coeff * chi1.value(&mu1) * chi2.value(&mu2);
        }
        total
    })
}

/// Ways to split the cycles of `mu` into a partition of `a` and the rest.
fn splittings(mu: &Partition, a: usize) -> Vec<(Partition, Partition)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &p in mu.parts() {
        match groups.last_mut() {
            Some((v, m)) if *v == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let weight: usize = groups.iter().zip(&choice).map(|((v, _), k)| v * k).sum();
        if weight == a {
            let mut first = Vec::new();
            let mut second = Vec::new();
            for ((v, m), &k) in groups.iter().zip(&choice) {
                first.extend(std::iter::repeat_n(*v, k));
                second.extend(std::iter::repeat_n(*v, m - k));
            }
            out.push((Partition::from_unsorted(first), Partition::from_unsorted(second)));
        }
        // odometer over 0..=m for each group
        let mut i = 0;
        loop {
            if i == groups.len() {
                return out;
            }
            if choice[i] < groups[i].1 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// A rational class function on `S_a x S_b`, indexed by pairs of cycle
/// types, both in [`Partition::all`] order (row-major in the first factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleClassFunction {
    a: usize,
    b: usize,
    values: Vec<Rational>,
}

impl BimoduleClassFunction {
    pub fn zero(a: usize, b: usize) -> Self {
        BimoduleClassFunction { a, b, values: vec![Rational::zero(); Partition::all(a).len() * Partition::all(b).len()] }
    }

    pub fn from_fn(a: usize, b: usize, mut f: impl FnMut(&Partition, &Partition) -> Rational) -> Self {
        let pa = Partition::all(a);
        let pb = Partition::all(b);
        let values = pa.iter().flat_map(|x| pb.iter().map(|y| (x, y)).collect::<Vec<_>>()).map(|(x, y)| f(x, y)).collect();
        BimoduleClassFunction { a, b, values }
    }

    pub fn from_values(a: usize, b: usize, values: Vec<Rational>) -> Result<Self> {
        let expected = Partition::all(a).len() * Partition::all(b).len();
        if values.len() != expected {
            return Err(Error::DimensionMismatch(format!("{} values for {expected} class pairs", values.len())));
        }
        Ok(BimoduleClassFunction { a, b, values })
    }

    /// `chi_lambda x chi_mu`.
    pub fn irreducible(lambda: &Partition, mu: &Partition) -> Self {
        let l = ClassFunction::irreducible(lambda);
        let m = ClassFunction::irreducible(mu);
        Self::outer(&l, &m)
    }

    pub fn outer(l: &ClassFunction, m: &ClassFunction) -> Self {
        let values = l.values().iter().flat_map(|x| m.values().iter().map(move |y| x * y)).collect();
        BimoduleClassFunction { a: l.degree(), b: m.degree(), values }
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, x: &Partition, y: &Partition) -> Rational {
        let ia = character_table(self.a).index_of(x).expect("partition of the first degree");
        let tb = character_table(self.b);
        let ib = tb.index_of(y).expect("partition of the second degree");
        self.values[ia * tb.partitions.len() + ib].clone()
    }

    pub fn dimension(&self) -> Rational {
        self.values.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if (self.a, self.b) != (other.a, other.b) {
            return Err(Error::DegreeMismatch(self.a * 1000 + self.b, other.a * 1000 + other.b));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x + y).collect();
        Ok(BimoduleClassFunction { a: self.a, b: self.b, values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x - y).collect();
        Ok(BimoduleClassFunction { a: self.a, b: self.b, values })
    }

    pub fn inner(&self, other: &Self) -> Result<Rational> {
        self.check(other)?;
        let pa = Partition::all(self.a);
        let pb = Partition::all(self.b);
        let mut acc = Rational::zero();
        for (i, x) in pa.iter().enumerate() {
            for (j, y) in pb.iter().enumerate() {
                let k = i * pb.len() + j;
                acc += &self.values[k] * &other.values[k] * z_inverse(x) * z_inverse(y);
            }
        }
        Ok(acc)
    }

    /// Forgets the second factor: the character of the underlying
    /// `S_a`-module.
    pub fn first_factor(&self) -> ClassFunction {
        let pb = Partition::all(self.b).len();
        let values = self.values.chunks(pb).map(|c| c.last().cloned().unwrap_or_else(Rational::zero)).collect();
        ClassFunction { n: self.a, values }
    }

    pub fn decompose(&self) -> Result<Decomposition> {
        let mut out = Vec::new();
        for lambda in Partition::all(self.a) {
            for mu in Partition::all(self.b) {
                let m = self.inner(&Self::irreducible(&lambda, &mu))?;
                let mult = as_multiplicity(&m, || format!("{lambda} x {mu}"))?;
                if mult > 0 {
                    out.push(Multiplicity { lambda: lambda.clone(), mu, mult });
                }
            }
        }
        if Rational::from_integer(decomposition_dimension(&out).into()) != self.dimension() {
            return Err(Error::NotACharacter("multiplicities do not account for the dimension".into()));
        }
        Ok(out)
    }

    pub fn from_decomposition(a: usize, b: usize, d: &[Multiplicity]) -> Result<Self> {
        let mut acc = Self::zero(a, b);
        for m in d {
            if (m.lambda.weight(), m.mu.weight()) != (a, b) {
                return Err(Error::DegreeMismatch(m.lambda.weight(), a));
            }
            let mut term = Self::irreducible(&m.lambda, &m.mu);
            term.values.iter_mut().for_each(|v| *v *= Rational::from_int(m.mult as i64));
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

pub fn decompose(chi: &ClassFunction) -> Result<Decomposition> {
    chi.decompose()
}

pub fn decompose_bimodule(chi: &BimoduleClassFunction) -> Result<Decomposition> {
    chi.decompose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[(&[usize], u64)]) -> Decomposition {
        parts.iter().map(|(l, m)| Multiplicity { lambda: p(l), mu: Partition::empty(), mult: *m }).collect()
    }

    #[test]
    fn orthonormality() {
        for n in 0..=8 {
            let t = character_table(n);
            for (i, a) in t.partitions.iter().enumerate() {
                for (j, b) in t.partitions.iter().enumerate() {
                    let ip = ClassFunction::irreducible(a).inner(&ClassFunction::irreducible(b)).unwrap();
                    assert_eq!(ip, Rational::from_int((i == j) as i64), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=8 {
            let t = character_table(n);
            for (i, x) in t.partitions.iter().enumerate() {
                for (j, _) in t.partitions.iter().enumerate() {
                    let s: i128 = t.values.iter().map(|row| row[i] as i128 * row[j] as i128).sum();
                    let expect = if i == j { x.centralizer_order() as i128 } else { 0 };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn regular_character_multiplicities_are_dimensions() {
        for n in 1..=6 {
            let reg = ClassFunction::regular(n);
            for l in Partition::all(n) {
                let m = reg.inner(&ClassFunction::irreducible(&l)).unwrap();
                assert_eq!(m, Rational::from_integer(l.hook_dimension().into()));
            }
        }
        let triv_sign = ClassFunction::irreducible(&p(&[3])).inner(&ClassFunction::irreducible(&p(&[1, 1, 1])));
        assert!(triv_sign.unwrap().is_zero());
    }

    #[test]
    fn induction_examples() {
        let one = ClassFunction::irreducible(&p(&[1]));
        assert_eq!(induce_outer(&one, &one).decompose().unwrap(), single(&[(&[2], 1), (&[1, 1], 1)]));
        for n in 1..=6 {
            let ind = induce_outer(&ClassFunction::irreducible(&Partition::column(n)), &one);
            let expect = vec![
                Multiplicity { lambda: Partition::hook(2, n - 1), mu: Partition::empty(), mult: 1 },
                Multiplicity { lambda: Partition::column(n + 1), mu: Partition::empty(), mult: 1 },
            ];
            assert_eq!(ind.decompose().unwrap(), expect);
        }
        let ind = induce_outer(&ClassFunction::irreducible(&p(&[2, 1, 1])), &one);
        assert_eq!(ind.decompose().unwrap(), single(&[(&[3, 1, 1], 1), (&[2, 2, 1], 1), (&[2, 1, 1, 1], 1)]));
        // sgn_3 x triv_1 x triv_1 induced to S_5
        let ind = induce_outer(&induce_outer(&ClassFunction::irreducible(&p(&[1, 1, 1])), &one), &one);
        assert_eq!(
            ind.decompose().unwrap(),
            single(&[(&[3, 1, 1], 1), (&[2, 2, 1], 1), (&[2, 1, 1, 1], 2), (&[1, 1, 1, 1, 1], 1)])
        );
    }

    #[test]
    fn zero_decomposes_to_nothing() {
        assert!(ClassFunction::zero(4).decompose().unwrap().is_empty());
        assert!(BimoduleClassFunction::zero(4, 2).decompose().unwrap().is_empty());
    }

    #[test]
    fn non_characters_are_rejected() {
        let half = ClassFunction::irreducible(&p(&[2, 1])).scale(&Rational::new(1.into(), 2.into()));
        assert!(matches!(half.decompose(), Err(Error::NotACharacter(_))));
        let neg = ClassFunction::irreducible(&p(&[2, 1])).scale(&Rational::from_int(-1));
        assert!(matches!(neg.decompose(), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn bimodule_round_trip() {
        let d = vec![
            Multiplicity { lambda: p(&[2, 1, 1]), mu: p(&[2]), mult: 1 },
            Multiplicity { lambda: p(&[1, 1, 1, 1]), mu: p(&[1, 1]), mult: 1 },
        ];
        let chi = BimoduleClassFunction::from_decomposition(4, 2, &d).unwrap();
        assert_eq!(chi.dimension(), Rational::from_int(4));
        assert_eq!(chi.decompose().unwrap(), d);
    }

    #[test]
    fn restriction_follows_branching() {
        let chi = ClassFunction::irreducible(&p(&[3, 1, 1])).restrict().unwrap();
        assert_eq!(chi.decompose().unwrap(), single(&[(&[3, 1], 1), (&[2, 1, 1], 1)]));
    }

    fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    proptest! {
        #[test]
        fn decompose_recovers_multiplicities(n in 1usize..7, mults in proptest::collection::vec(0u64..4, 15)) {
            let d: Decomposition = Partition::all(n)
                .into_iter()
                .zip(mults)
                .filter(|(_, m)| *m > 0)
                .map(|(lambda, mult)| Multiplicity { lambda, mu: Partition::empty(), mult })
                .collect();
            let chi = ClassFunction::from_decomposition(n, &d).unwrap();
            prop_assert_eq!(chi.decompose().unwrap(), d);
        }

        #[test]
        fn pieri_for_rows_and_columns((a, b) in (1usize..6, 1usize..4), lambda_seed in 0usize..1000) {
            let all = Partition::all(a);
            let lambda = all[lambda_seed % all.len()].clone();
            for (second, vertical) in [(Partition::row(b), false), (Partition::column(b), true)] {
                let ind = induce_outer(&ClassFunction::irreducible(&lambda), &ClassFunction::irreducible(&second));
                let got = ind.decompose().unwrap();
                // Pieri: add b boxes, no two in a column (row) or no two in a row (column)
                let mut expect = Decomposition::new();
                for nu in Partition::all(a + b) {
                    if pieri_strip(&lambda, &nu, vertical) {
                        expect.push(Multiplicity { lambda: nu, mu: Partition::empty(), mult: 1 });
                    }
                }
                prop_assert_eq!(got, expect);
            }
        }

        #[test]
        fn irreducible_dimension_is_hook_dimension(l in (0usize..9).prop_flat_map(partition_of)) {
            let chi = ClassFunction::irreducible(&l);
            prop_assert_eq!(chi.dimension(), Rational::from_integer(l.hook_dimension().into()));
        }
    }

    fn pieri_strip(lambda: &Partition, nu: &Partition, vertical: bool) -> bool {
        let (l, n) = if vertical { (lambda.conjugate(), nu.conjugate()) } else { (lambda.clone(), nu.clone()) };
        let lp = l.parts();
        let np = n.parts();
        if np.len() < lp.len() || np.len() > lp.len() + 1 {
            return false;
        }
        // horizontal strip: nu_1 >= l_1 >= nu_2 >= l_2 >= ...
        (0..np.len()).all(|i| {
            let li = lp.get(i).copied().unwrap_or(0);
            np[i] >= li && (i == 0 || lp[i - 1] >= np[i])
        })
    }
}
