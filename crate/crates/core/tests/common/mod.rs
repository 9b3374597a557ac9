//! Property checks shared by the proptest suite and the acceptance gate.
#![allow(dead_code)]

use lieho::exactalg::Permutation;
use lieho::freelie::LieTensorSpace;
use lieho::funcalc::{full_character, MultilinearBasis, Representation, ShapeSum};
use lieho::homology::h1_bimodule;
use lieho::symchar::{character_table, decomposition_dimension};
use lieho::Rational;
use num_traits::{One, Zero};

/// `rho(g h) = rho(g) rho(h)` for the letter action.
pub fn letter_action_is_homomorphism<R: Representation + ?Sized>(rep: &R, g: &Permutation, h: &Permutation) -> bool {
    let id = Permutation::identity(rep.slot_degree());
    rep.matrix(&g.compose(h).unwrap(), &id) == rep.matrix(g, &id).compose(&rep.matrix(h, &id))
}

/// Letter and slot actions commute, and together give the joint action.
pub fn slot_action_commutes<R: Representation + ?Sized>(rep: &R, sigma: &Permutation, pi: &Permutation) -> bool {
    let (e_l, e_s) = (Permutation::identity(rep.letter_degree()), Permutation::identity(rep.slot_degree()));
    let l = rep.matrix(sigma, &e_s);
    let s = rep.matrix(&e_l, pi);
    let ls = l.compose(&s);
    ls == s.compose(&l) && ls == rep.matrix(sigma, pi)
}

/// Row and column orthogonality of the character table of `S_n`.
pub fn character_table_orthogonal(n: usize) -> bool {
    let t = character_table(n);
    let parts = &t.partitions;
    let k = parts.len();
    let fact: u128 = (1..=n as u128).product();
    let rows = (0..k).all(|a| {
        (0..k).all(|b| {
            let s: Rational = parts
                .iter()
                .enumerate()
                .map(|(c, mu)| Rational::from_integer((t.values[a][c] * t.values[b][c]).into()) / Rational::from_integer(mu.centralizer_order().into()))
                .sum();
            s == if a == b { Rational::one() } else { Rational::zero() }
        })
    });
    let cols = (0..k).all(|c| {
        (0..k).all(|d| {
            let s: i64 = (0..k).map(|a| t.values[a][c] * t.values[a][d]).sum();
            s as u128 == if c == d { parts[c].centralizer_order() } else { 0 }
        })
    });
    let degrees: u128 = parts.iter().map(|l| l.hook_dimension().pow(2)).sum();
    rows && cols && degrees == fact
}

/// Every decomposition has the dimension of the space it decomposes.
pub fn bookkeeping_holds<R: Representation + ?Sized>(rep: &R) -> bool {
    let d = full_character(rep).decompose().unwrap();
    decomposition_dimension(&d) == rep.dim() as u128
}

pub fn h1_bookkeeping_holds(r: usize, n: usize) -> bool {
    let h = h1_bimodule(r, n).unwrap();
    let d = h.h1.as_ref().unwrap();
    h.passed() && Some(decomposition_dimension(d) as u64) == h.h1_dim
}

/// A permutation of `0..n` from an arbitrary seed.
pub fn perm(n: usize, seed: u64) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    let mut s = seed;
    for i in (1..n).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        images.swap(i, (s >> 33) as usize % (i + 1));
    }
    Permutation::from_images(images).unwrap()
}

pub fn shape_basis(s: &str) -> MultilinearBasis {
    MultilinearBasis::new(&s.parse().unwrap()).unwrap()
}

pub fn lie_space(r: usize, n: usize, with_v: bool) -> LieTensorSpace {
    LieTensorSpace::new(r, n, with_v)
}

pub fn orbit(s: &str) -> ShapeSum {
    ShapeSum::orbit(&s.parse().unwrap()).unwrap()
}

/// A fixed battery over small spaces, used by the acceptance gate.
pub fn battery() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let lie: Vec<(usize, usize, bool)> = vec![(1, 4, true), (2, 4, true), (2, 5, false), (3, 5, true), (1, 5, false)];
    for (i, &(r, n, v)) in lie.iter().enumerate() {
        let s = lie_space(r, n, v);
        let (g, h) = (perm(n, i as u64), perm(n, 100 + i as u64));
        out.push((format!("letter action homomorphism on Lie tensors r={r} n={n} v={v}"), letter_action_is_homomorphism(&s, &g, &h)));
        out.push((format!("slot action commutes on Lie tensors r={r} n={n} v={v}"), slot_action_commutes(&s, &g, &perm(r, 7 + i as u64))));
        out.push((format!("bookkeeping on Lie tensors r={r} n={n} v={v}"), bookkeeping_holds(&s)));
    }
    for s in ["L3*T1*T1", "L2*L2", "G2*L2*T1", "L3*G2"] {
        let b = shape_basis(s);
        let n = b.letter_degree();
        out.push((format!("letter action homomorphism on {s}"), letter_action_is_homomorphism(&b, &perm(n, 3), &perm(n, 4))));
        out.push((format!("bookkeeping on {s}"), bookkeeping_holds(&b)));
    }
    for s in ["L3*T1*T1", "L2*L2*T1"] {
        let o = orbit(s);
        out.push((format!("slot action commutes on the orbit of {s}"), slot_action_commutes(&o, &perm(o.letter_degree(), 5), &perm(o.slot_degree(), 6))));
    }
    out.push(("character table orthogonality n <= 8".into(), (0..=8).all(character_table_orthogonal)));
    for (r, n) in [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5)] {
        out.push((format!("H1 bookkeeping r={r} n={n}"), h1_bookkeeping_holds(r, n)));
    }
    out
}
