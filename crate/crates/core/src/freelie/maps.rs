use super::space::{adbar_matrix, LieTensorSpace};
use crate::error::{Error, Result};
use crate::exactalg::{inverse, kernel_basis, Field, Permutation};
use crate::funcalc::basis::{mask_letters, shuffle_sign};
use crate::funcalc::{wedge_coproduct, wedge_product, BlockMap, FunctorShape, MultilinearBasis, NaturalMap, Representation, ShapeSum, Slot};
use crate::{QMatrix, QSubspace, Rational};

fn shape(s: &str) -> FunctorShape {
    s.parse().expect("shape literal")
}

/// Exchange of the two slots of a two-slot shape.
pub fn tau(on: &FunctorShape) -> Result<NaturalMap> {
    NaturalMap::slot_permutation(on, &Permutation::transposition(2, 0, 1))
}

/// `kappa = (Id x mu)(psi_{2,1} x Id): Lambda^3 x Lambda^1 -> Lambda^2 x Lambda^2`.
pub fn kappa() -> Result<NaturalMap> {
    let split = wedge_coproduct(2, 1)?.embed(&shape("L3*T1"), &[0])?;
    let join = wedge_product(1, 1)?.embed(&split.codomain, &[1, 2])?;
    split.then(&join)
}

/// `tau kappa tau: Lambda^1 x Lambda^3 -> Lambda^2 x Lambda^2`.
pub fn kappa_tilde() -> Result<NaturalMap> {
    tau(&shape("T1*L3"))?.then(&kappa()?)?.then(&tau(&shape("L2*L2"))?)
}

/// `e = psi mu / 4` on `Lambda^3 x Lambda^1`.
pub fn idempotent_e() -> Result<NaturalMap> {
    let e = wedge_product(3, 1)?.then(&wedge_coproduct(3, 1)?)?;
    Ok(e.scale(&Rational::new(1.into(), 4.into())))
}

/// `tau alpha = 2e - Id`, an endomorphism of `Lambda^3 x Lambda^1`.
pub fn tau_alpha() -> Result<NaturalMap> {
    let id = NaturalMap::identity(&shape("L3*T1"))?;
    idempotent_e()?.scale(&Rational::from_int(2)).add(&id.scale(&Rational::from_int(-1)))
}

/// `alpha: Lambda^3 x Lambda^1 -> Lambda^1 x Lambda^3`, computed as
/// `tau (2e - Id)` and, independently, as the unique solution of
/// `kappa = kappa_tilde alpha`. Disagreement means a sign convention is off.
pub fn alpha() -> Result<NaturalMap> {
    let via_e = tau_alpha()?.then(&tau(&shape("L3*T1"))?)?;
    let kt = kappa_tilde()?;
    let solved = crate::exactalg::solve_in_span(&kt.matrix, &kappa()?.matrix)?;
    if solved != via_e.matrix {
        return Err(Error::SolveMismatch(format!("kappa = kappa~ alpha gives {solved:?}, tau(2e - Id) gives {:?}", via_e.matrix)));
    }
    Ok(via_e)
}

/// Shape with `Lambda^3` at slot `i` and letters elsewhere, `r` slots.
pub fn block_shape(r: usize, i: usize) -> FunctorShape {
    FunctorShape::new((0..r).map(|s| if s == i { Slot::wedge(3) } else { Some(Slot::LETTER) }))
}

/// Shape with `Lambda^2` at slots `i` and `j`, letters elsewhere.
pub fn pair_shape(r: usize, i: usize, j: usize) -> FunctorShape {
    FunctorShape::new((0..r).map(|s| if s == i || s == j { Slot::wedge(2) } else { Some(Slot::LETTER) }))
}

fn check_pair(r: usize, i: usize, j: usize) -> Result<()> {
    if !(i < j && j < r) {
        return Err(Error::InvalidArgument(format!("need i < j < r = {r} (0-based), got ({i}, {j})")));
    }
    Ok(())
}

/// `alpha_{i;j}`: block `i` to block `j` by `alpha` on factors `i` and `j`
/// (0-based).
pub fn alpha_ij(r: usize, i: usize, j: usize) -> Result<NaturalMap> {
    check_pair(r, i, j)?;
    alpha()?.embed(&block_shape(r, i), &[i, j])
}

/// `beta = (Id x tau)(tau alpha x Id)` on `Lambda^3 x Lambda^1 x Lambda^1`.
pub fn beta() -> Result<NaturalMap> {
    let first = tau_alpha()?.embed(&shape("L3*T1*T1"), &[0, 1])?;
    let swap = tau(&shape("T1*T1"))?.embed(&shape("L3*T1*T1"), &[1, 2])?;
    first.then(&swap)
}

/// Blocks `Lambda^3` at slot `i`, for `i = 0..r`.
pub fn block_sum(r: usize) -> Result<ShapeSum> {
    ShapeSum::new(&(0..r).map(|i| block_shape(r, i)).collect::<Vec<_>>())
}

pub fn pairs(r: usize) -> Vec<(usize, usize)> {
    (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect()
}

/// `dbar_r`: the pair block `(i, j)` receives `kappa` at factors `(i, j)`
/// from block `i` and `kappa_tilde` from block `j`. Letters `r + 2`.
pub fn deltabar(r: usize) -> Result<BlockMap> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("dbar needs r >= 2, got {r}")));
    }
    let domain = block_sum(r)?;
    let codomain = ShapeSum::new(&pairs(r).iter().map(|&(i, j)| pair_shape(r, i, j)).collect::<Vec<_>>())?;
    let (k, kt) = (kappa()?, kappa_tilde()?);
    let mut parts = Vec::new();
    for (i, j) in pairs(r) {
        parts.push(k.embed(&block_shape(r, i), &[i, j])?);
        parts.push(kt.embed(&block_shape(r, j), &[i, j])?);
    }
    BlockMap::new(domain, codomain, &parts)
}

/// `{(X_i) : alpha_{i;j} X_i = -X_j for all i < j}` inside the block sum.
pub fn cocycle_subspace(r: usize) -> Result<QSubspace> {
    let sum = block_sum(r)?;
    let d = sum.blocks()[0].dim();
    let mut triplets = Vec::new();
    for (p, (i, j)) in pairs(r).into_iter().enumerate() {
        let a = alpha_ij(r, i, j)?;
        for (col, entries) in a.matrix.columns().iter().enumerate() {
            for (row, x) in entries {
                triplets.push((p * d + row, sum.block_offset(i) + col, x.clone()));
            }
        }
        for t in 0..d {
            triplets.push((p * d + t, sum.block_offset(j) + t, Rational::from_int(1)));
        }
    }
    let m = QMatrix::from_triplets(pairs(r).len() * d, r * d, triplets);
    Ok(kernel_basis(&m).basis)
}

/// `iota`: the block sum into `V x Lie^{x r}` in weight `r + 2`, applying
/// `psi_{1,2}` to the `Lambda^3` slot; the `Lambda^2` factor is read as a
/// bracket `[b, c]` with `b < c`.
pub fn iota(r: usize) -> Result<(LieTensorSpace, QMatrix)> {
    let sum = block_sum(r)?;
    let target = LieTensorSpace::new(r, r + 2, true);
    let mut triplets = Vec::new();
    for (b, basis) in sum.blocks().iter().enumerate() {
        for (j, e) in basis.elements().iter().enumerate() {
            let triple = mask_letters(e[b]);
            for &a in &triple {
                let rest = e[b] & !(1 << a);
                let sign = shuffle_sign(&[1 << a, rest]);
                let mut words: Vec<Vec<u8>> = vec![vec![a as u8]];
                for (s, &m) in e.iter().enumerate() {
                    words.push(if s == b { mask_letters(rest).iter().map(|&x| x as u8).collect() } else { vec![m.trailing_zeros() as u8] });
                }
                let i = target.index_of(&words).expect("iota target");
                triplets.push((i, sum.block_offset(b) + j, Rational::from_int(sign)));
            }
        }
    }
    let m = QMatrix::from_triplets(target.dim(), sum.dim(), triplets);
    Ok((target, m))
}

/// The block-`i` component of a subspace of the block sum.
pub fn project_to_block(sum: &ShapeSum, sub: &QSubspace, b: usize) -> QSubspace {
    let (start, d) = (sum.block_offset(b), sum.blocks()[b].dim());
    let vectors = sub
        .vectors()
        .iter()
        .map(|v| v.iter().filter(|(i, _)| (start..start + d).contains(i)).map(|(i, x)| (i - start, x.clone())).collect())
        .collect();
    QSubspace::from_vectors(d, vectors)
}

/// `alpha_{0;2}^{-1} alpha_{1;2} alpha_{0;1}` on block 0 for `r = 3`.
pub fn alpha_cycle() -> Result<QMatrix> {
    let a01 = alpha_ij(3, 0, 1)?;
    let a12 = alpha_ij(3, 1, 2)?;
    let a02 = alpha_ij(3, 0, 2)?;
    Ok(inverse(&a02.matrix)?.compose(&a12.matrix).compose(&a01.matrix))
}

/// Multilinear basis of `Lambda^3 x Lambda^1 x Lambda^1`, where `beta` lives.
pub fn beta_space() -> Result<MultilinearBasis> {
    MultilinearBasis::new(&shape("L3*T1*T1"))
}

pub fn adbar_kernel_dim(r: usize, n: usize) -> usize {
    let ad = adbar_matrix(r, n);
    kernel_basis(&ad.matrix).basis.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rank;
    use crate::funcalc::basis::Element;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    /// Column of a natural map at a domain element, as (element, coefficient).
    fn apply(m: &NaturalMap, e: Element) -> Vec<(Element, Rational)> {
        let db = MultilinearBasis::new(&m.domain).unwrap();
        let cb = MultilinearBasis::new(&m.codomain).unwrap();
        let j = db.index_of(&e).unwrap();
        m.matrix.column(j).iter().map(|(i, x)| (cb.element(*i).clone(), x.clone())).collect()
    }

    fn sorted(mut v: Vec<(Element, Rational)>) -> Vec<(Element, Rational)> {
        v.sort();
        v
    }

    #[test]
    fn kappa_formula() {
        // x, y, z, w = letters 0..4
        let got = apply(&kappa().unwrap(), vec![0b0111, 0b1000]);
        let expect = vec![(vec![0b0011, 0b1100], q(1, 1)), (vec![0b0101, 0b1010], q(-1, 1)), (vec![0b0110, 0b1001], q(1, 1))];
        assert_eq!(sorted(got), sorted(expect));
    }

    #[test]
    fn kappas_are_injective_with_equal_images() {
        let (k, kt) = (kappa().unwrap(), kappa_tilde().unwrap());
        assert_eq!((k.matrix.nrows(), k.matrix.ncols()), (6, 4));
        assert_eq!(rank(&k.matrix), 4);
        assert_eq!(rank(&kt.matrix), 4);
        assert_eq!(QSubspace::span_of_columns(&k.matrix), QSubspace::span_of_columns(&kt.matrix));
    }

    #[test]
    fn idempotent_and_involution() {
        let e = idempotent_e().unwrap();
        assert_eq!(e.matrix.compose(&e.matrix), e.matrix);
        let ta = tau_alpha().unwrap();
        assert_eq!(ta.matrix.compose(&ta.matrix), QMatrix::identity(4));
        let got = apply(&ta, vec![0b0111, 0b1000]);
        let h = q(-1, 2);
        let expect = vec![
            (vec![0b0111, 0b1000], h.clone()),
            (vec![0b1011, 0b0100], h.clone()),
            (vec![0b1101, 0b0010], -h.clone()),
            (vec![0b1110, 0b0001], h),
        ];
        assert_eq!(sorted(got), sorted(expect));
        alpha().unwrap();
    }

    #[test]
    fn beta_cubed_is_the_alpha_cycle() {
        let b = beta().unwrap();
        assert_eq!(alpha_cycle().unwrap(), b.matrix.pow(3));
        assert_eq!(alpha_ij(2, 0, 1).unwrap(), alpha().unwrap());
        assert!(alpha_ij(3, 2, 1).is_err());
    }

    #[test]
    fn minus_beta_formula() {
        let mb = beta().unwrap().scale(&q(-1, 1));
        // x y z = 0 1 2, s = 3, t = 4; slots (L3, T1, T1)
        let got = apply(&mb, vec![0b00111, 0b01000, 0b10000]);
        let h = q(1, 2);
        let expect = vec![
            (vec![0b00111, 0b10000, 0b01000], h.clone()),
            (vec![0b01011, 0b10000, 0b00100], h.clone()),
            (vec![0b01101, 0b10000, 0b00010], -h.clone()),
            (vec![0b01110, 0b10000, 0b00001], h),
        ];
        assert_eq!(sorted(got), sorted(expect));
    }

    #[test]
    fn deltabar_kernels() {
        let d = deltabar(2).unwrap();
        assert_eq!(d.matrix.ncols(), 8);
        assert_eq!(kernel_basis(&d.matrix).basis.dim(), 4);
        let d = deltabar(3).unwrap();
        assert_eq!(kernel_basis(&d.matrix).basis.dim(), 7);
        assert!(deltabar(1).is_err());
    }

    #[test]
    fn cocycle_subspace_is_the_kernel() {
        for r in 2..=4 {
            assert_eq!(cocycle_subspace(r).unwrap(), kernel_basis(&deltabar(r).unwrap().matrix).basis, "r = {r}");
        }
    }
}
