use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`; the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// `(a, 1^k)`: a hook.
    pub fn hook(a: usize, k: usize) -> Self {
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, k));
        Partition::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Dimension of the irreducible module, by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.weight() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j - 1 + conj.0[j] - i - 1 + 1) as u128;
            }
        }
        num /= hooks;
        num
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut k = 0;
        while k < self.0.len() {
            let part = self.0[k];
            let mult = self.0[k..].iter().take_while(|&&p| p == part).count();
            for m in 1..=mult {
                z *= part as u128 * m as u128;
            }
            k += mult;
        }
        z
    }

    /// Size of the conjugacy class of this cycle type in the symmetric group.
    pub fn class_size(&self) -> u128 {
        let fact: u128 = (1..=self.weight() as u128).product();
        fact / self.centralizer_order()
    }

    /// All partitions of `n`, in decreasing lexicographic order:
    /// `(n)` first, `(1^n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dotted form used in CSV output, e.g. `3.1.1`; the empty partition is `0`.
    pub fn dotted(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
    }
}

pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Larger weight first, then decreasing lexicographic, matching
/// [`Partition::all`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.weight().cmp(&self.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Accepts `3,1,1`, `(3,1,1)`, `3.1.1` or `[3,1,1]`; `()` and `0` are the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.is_empty() || inner == "0" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split([',', '.'])
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition numbers by the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
    fn count_by_recurrence(n: usize) -> usize {
        let mut table = vec![vec![0usize; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if k <= m { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    #[test]
    fn enumeration_matches_recurrence() {
        assert_eq!(Partition::all(4).len(), 5);
        for n in 0..=12 {
            assert_eq!(Partition::all(n).len(), count_by_recurrence(n), "n = {n}");
        }
        assert_eq!(Partition::all(4), vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[3, 1, 1]).hook_dimension(), 6);
        assert_eq!(p(&[2, 2, 1]).hook_dimension(), 5);
        assert_eq!(p(&[2, 1, 1, 1]).hook_dimension(), 4);
        assert_eq!(Partition::empty().hook_dimension(), 1);
        for r in 2..=8 {
            assert_eq!(Partition::hook(r, 2).hook_dimension(), (r * (r + 1) / 2) as u128);
        }
    }

    #[test]
    fn sum_of_squares_is_factorial() {
        for n in 0..=8 {
            let total: u128 = Partition::all(n).iter().map(|l| l.hook_dimension().pow(2)).sum();
            assert_eq!(total, (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn conjugates() {
        for r in 2..=7 {
            let mut expect = vec![3];
            expect.extend(std::iter::repeat_n(1, r - 1));
            assert_eq!(Partition::hook(r, 2).conjugate(), p(&expect));
        }
        for n in 0..=8 {
            for l in Partition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=8 {
            let total: u128 = Partition::all(n).iter().map(Partition::class_size).sum();
            assert_eq!(total, (1..=n as u128).product::<u128>());
        }
    }

    #[test]
    fn parsing() {
        assert_eq!("3.1.1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("(2,2)".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).dotted(), "3.1.1");
    }
}
