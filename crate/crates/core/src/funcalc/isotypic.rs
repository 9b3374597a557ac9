use num_traits::Zero;

use super::rep::Representation;
use crate::error::{Error, Result};
use crate::exactalg::{Field, Partition, Permutation};
use crate::symchar::character_table;
use crate::{QMatrix, QSubspace, Rational};

/// A formal integer combination of permutations.
pub type GroupAlgebraElement = Vec<(Permutation, i64)>;

/// Matrix of a group algebra element acting by letters.
pub fn group_algebra_matrix<R: Representation + ?Sized>(rep: &R, elt: &[(Permutation, i64)]) -> QMatrix {
    let pi = Permutation::identity(rep.slot_degree());
    let mut total = QMatrix::zeros(rep.dim(), rep.dim());
    for (g, c) in elt {
        if *c != 0 {
            total = total.add(&rep.matrix(g, &pi).scale(&Rational::from_int(*c))).expect("square");
        }
    }
    total
}

/// The central idempotent `dim(lambda)/n! sum_g chi_lambda(g) g`, as a matrix.
pub fn isotypic_projector<R: Representation + ?Sized>(rep: &R, lambda: &Partition) -> Result<QMatrix> {
    let n = rep.letter_degree();
    if lambda.weight() != n {
        return Err(Error::DegreeMismatch(lambda.weight(), n));
    }
    let table = character_table(n);
    let elt: GroupAlgebraElement = Permutation::all(n).into_iter().map(|g| {
        let c = table.value(lambda, &g.cycle_type());
        (g, c)
    }).collect();
    let fact: i64 = (1..=n as i64).product();
    let scale = Rational::new((lambda.hook_dimension() as i64).into(), fact.into());
    Ok(group_algebra_matrix(rep, &elt).scale(&scale))
}

pub fn isotypic_component<R: Representation + ?Sized>(rep: &R, lambda: &Partition) -> Result<QSubspace> {
    Ok(QSubspace::span_of_columns(&isotypic_projector(rep, lambda)?))
}

/// Young symmetrizer `b a` of the tableau numbered row by row, where `a` sums
/// the row group and `b` is the signed sum over the column group.
pub fn young_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let n = lambda.weight();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in lambda.parts() {
        rows.push((next..next + len).collect());
        next += len;
    }
    let cols: Vec<Vec<usize>> =
        (0..lambda.parts().first().copied().unwrap_or(0)).map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect();
    let row_group = block_group(n, &rows);
    let col_group = block_group(n, &cols);
    let mut out = Vec::with_capacity(row_group.len() * col_group.len());
    for c in &col_group {
        for r in &row_group {
            out.push((c.compose(r).expect("degree"), c.sign()));
        }
    }
    out
}

/// Permutations preserving each block of a set partition of `0..n`.
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for block in blocks {
        let local = Permutation::all(block.len());
        let mut next = Vec::with_capacity(group.len() * local.len());
        for g in &group {
            for p in &local {
                let mut images: Vec<usize> = g.images().to_vec();
                for (k, &b) in block.iter().enumerate() {
                    images[b] = block[p.apply(k)];
                }
                next.push(Permutation::from_images(images).expect("block permutation"));
            }
        }
        group = next;
    }
    group
}

/// Image of the Young symmetrizer of `lambda`: its dimension is the
/// multiplicity of `lambda`, and every equivariant endomorphism preserves it.
pub fn multiplicity_space<R: Representation + ?Sized>(rep: &R, lambda: &Partition) -> Result<QSubspace> {
    if lambda.weight() != rep.letter_degree() {
        return Err(Error::DegreeMismatch(lambda.weight(), rep.letter_degree()));
    }
    Ok(QSubspace::span_of_columns(&group_algebra_matrix(rep, &young_symmetrizer(lambda))))
}

/// True when `m` commutes with the letter action of both generators.
pub fn is_equivariant<R: Representation + ?Sized>(rep: &R, m: &QMatrix) -> bool {
    let n = rep.letter_degree();
    if n < 2 {
        return true;
    }
    let pi = Permutation::identity(rep.slot_degree());
    let cycle = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("cycle");
    [Permutation::transposition(n, 0, 1), cycle].iter().all(|g| {
        let rho = rep.matrix(g, &pi);
        let lhs = m.compose(&rho);
        let rhs = rho.compose(m);
        lhs.sub(&rhs).map(|d| d.columns().iter().all(|c| c.iter().all(|(_, x)| x.is_zero()))).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcalc::MultilinearBasis;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn projectors_split_the_space() {
        let b = MultilinearBasis::new(&"L3*T1*T1".parse().unwrap()).unwrap();
        let mut total = 0;
        for (lambda, expect) in [(p(&[1, 1, 1, 1, 1]), 1), (p(&[3, 1, 1]), 6), (p(&[2, 2, 1]), 5), (p(&[2, 1, 1, 1]), 8)] {
            let proj = isotypic_projector(&b, &lambda).unwrap();
            assert_eq!(proj.compose(&proj), proj);
            assert!(is_equivariant(&b, &proj));
            assert_eq!(isotypic_component(&b, &lambda).unwrap().dim(), expect);
            total += expect;
        }
        assert_eq!(total, 20);
        assert_eq!(isotypic_component(&b, &p(&[5])).unwrap().dim(), 0);
    }

    #[test]
    fn young_symmetrizer_images_have_multiplicity_dimension() {
        let b = MultilinearBasis::new(&"L3*T1*T1".parse().unwrap()).unwrap();
        assert_eq!(multiplicity_space(&b, &p(&[2, 1, 1, 1])).unwrap().dim(), 2);
        assert_eq!(multiplicity_space(&b, &p(&[2, 2, 1])).unwrap().dim(), 1);
        assert_eq!(multiplicity_space(&b, &p(&[4, 1])).unwrap().dim(), 0);
        assert_eq!(young_symmetrizer(&p(&[2, 1, 1, 1])).len(), 48);
    }
}
