use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactalg::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotKind {
    /// A bare letter: `T^1 = Lambda^1 = Gamma^1`.
    Letter,
    Wedge,
    Divided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub kind: SlotKind,
    pub degree: usize,
}

impl Slot {
    pub const LETTER: Slot = Slot { kind: SlotKind::Letter, degree: 1 };

    /// `Lambda^k`; `None` for `k = 0`, a letter slot for `k = 1`.
    pub fn wedge(k: usize) -> Option<Slot> {
        match k {
            0 => None,
            1 => Some(Slot::LETTER),
            _ => Some(Slot { kind: SlotKind::Wedge, degree: k }),
        }
    }

    /// `Gamma^k`; `None` for `k = 0`, a letter slot for `k = 1`.
    pub fn divided(k: usize) -> Option<Slot> {
        match k {
            0 => None,
            1 => Some(Slot::LETTER),
            _ => Some(Slot { kind: SlotKind::Divided, degree: k }),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SlotKind::Letter => write!(f, "T1"),
            SlotKind::Wedge => write!(f, "L{}", self.degree),
            SlotKind::Divided => write!(f, "G{}", self.degree),
        }
    }
}

/// An ordered tensor product of basic functors.
///
/// Degree 0 factors are dropped and degree 1 factors become letter slots, so
/// two shapes denote the same functor exactly when they are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctorShape {
    slots: Vec<Slot>,
}

impl FunctorShape {
    pub fn new(slots: impl IntoIterator<Item = Option<Slot>>) -> Self {
        FunctorShape { slots: slots.into_iter().flatten().collect() }
    }

    pub fn from_slots(slots: Vec<Slot>) -> Self {
        FunctorShape { slots }
    }

    pub fn wedge(k: usize) -> Self {
        Self::new([Slot::wedge(k)])
    }

    pub fn divided(k: usize) -> Self {
        Self::new([Slot::divided(k)])
    }

    /// `T^k`: `k` letter slots.
    pub fn letters(k: usize) -> Self {
        FunctorShape { slots: vec![Slot::LETTER; k] }
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.slots.iter().map(|s| s.degree).sum()
    }

    pub fn concat(&self, other: &FunctorShape) -> FunctorShape {
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        FunctorShape { slots }
    }

    /// The shape whose slot `pi(s)` is slot `s` of this one.
    pub fn permuted(&self, pi: &Permutation) -> Result<FunctorShape> {
        if pi.degree() != self.len() {
            return Err(Error::DegreeMismatch(pi.degree(), self.len()));
        }
        let mut slots = self.slots.clone();
        for (s, slot) in self.slots.iter().enumerate() {
            slots[pi.apply(s)] = *slot;
        }
        Ok(FunctorShape { slots })
    }
}

impl fmt::Display for FunctorShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            return write!(f, "T0");
        }
        let parts: Vec<String> = self.slots.iter().map(Slot::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Grammar: factors `L<k>`, `G<k>` or `T<k>` (k a positive integer) joined
/// by `*`, no whitespace. `T<k>` stands for `k` letter slots; `L1` and `G1`
/// are letter slots.
impl FromStr for FunctorShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::ShapeParse(s.to_string(), why.to_string());
        if s.is_empty() {
            return Err(bad("empty shape"));
        }
        let mut slots = Vec::new();
        for factor in s.split('*') {
            let mut chars = factor.chars();
            let kind = chars.next().ok_or_else(|| bad("empty factor"))?;
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(&format!("factor {factor:?} needs a positive degree")));
            }
            let k: usize = digits.parse().map_err(|_| bad("degree out of range"))?;
            if k == 0 {
                return Err(bad("degrees must be positive"));
            }
            match kind {
                'L' => slots.extend(Slot::wedge(k)),
                'G' => slots.extend(Slot::divided(k)),
                'T' => slots.extend(std::iter::repeat_n(Slot::LETTER, k)),
                _ => return Err(bad(&format!("unknown functor {kind:?}"))),
            }
        }
        Ok(FunctorShape { slots })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        let s: FunctorShape = "L3*T1*T1".parse().unwrap();
        assert_eq!(s, "L3*T2".parse().unwrap());
        assert_eq!(s, "L3*L1*G1".parse().unwrap());
        assert_eq!(s.total_degree(), 5);
        assert_eq!(s.to_string(), "L3*T1*T1");
        assert_eq!("G4".parse::<FunctorShape>().unwrap(), FunctorShape::divided(4));
        for bad in ["", "L3*", "L0", "X2", "L 3", "L3**T1", "L-1", "Lx"] {
            assert!(bad.parse::<FunctorShape>().is_err(), "{bad:?}");
        }
    }
}
