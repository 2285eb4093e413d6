//! Lattices in Q^n given by (possibly redundant) rational generators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::intmat::IntMat;
use super::rat::Rat;
use super::ratmat::RatMat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("rank mismatch: sublattice has rank {sub}, superlattice has rank {sup}")]
    RankMismatch { sub: usize, sup: usize },
    #[error("sublattice is not contained in the superlattice")]
    NotContained,
}

/// Hermite-reduced basis of the lattice generated by `gens` inside Q^n.
pub fn basis_from_generators(n: usize, gens: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let m = RatMat::from_rows(gens);
    assert_eq!(m.cols(), n, "generator length mismatch");
    let scale = m.denominator_lcm();
    let h = m.scaled_to_int(&scale).hermite_normal_form();
    let s = Rat::from_integer(scale);
    (0..h.rows())
        .map(|i| {
            h.row(i)
                .iter()
                .map(|x| Rat::from_integer(x.clone()) / &s)
                .collect()
        })
        .collect()
}

/// Coordinates of `v` in the given basis, if `v` lies in its rational span.
pub fn coordinates(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    RatMat::from_columns(v.len(), basis).solve(v)
}

/// True iff `v` is an integral combination of `basis`.
pub fn contains(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    coordinates(basis, v).is_some_and(|c| c.iter().all(Rat::is_integer))
}

/// Order of `sup / sub`, i.e. |det| of the sub basis written in sup coordinates.
///
/// Both arguments may be redundant generating sets.
pub fn lattice_index(sub: &[Vec<Rat>], sup: &[Vec<Rat>]) -> Result<BigInt, LatticeError> {
    let n = sub.first().or(sup.first()).map_or(0, Vec::len);
    let sub = basis_from_generators(n, sub);
    let sup = basis_from_generators(n, sup);
    if sub.len() != sup.len() {
        return Err(LatticeError::RankMismatch {
            sub: sub.len(),
            sup: sup.len(),
        });
    }
    let k = sub.len();
    let mut change = IntMat::zeros(k, k);
    for (j, v) in sub.iter().enumerate() {
        let c = coordinates(&sup, v).ok_or(LatticeError::NotContained)?;
        for (i, x) in c.into_iter().enumerate() {
            if !x.is_integer() {
                return Err(LatticeError::NotContained);
            }
            change.set(i, j, x.to_integer());
        }
    }
    Ok(change.determinant().abs())
}

/// Basis of `lattice ∩ span(subspace)`.
pub fn intersect_with_subspace(
    n: usize,
    lattice: &[Vec<Rat>],
    subspace: &[Vec<Rat>],
) -> Vec<Vec<Rat>> {
    let basis = basis_from_generators(n, lattice);
    if basis.is_empty() || subspace.is_empty() {
        return Vec::new();
    }
    // Rows of `ann` cut out span(subspace).
    let ann = RatMat::from_rows(subspace).nullspace();
    if ann.is_empty() {
        return basis;
    }
    let b = RatMat::from_columns(n, &basis);
    let pb = RatMat::from_rows(&ann).mul(&b);
    let scale = pb.denominator_lcm();
    let kernel = pb.scaled_to_int(&scale).integer_kernel();
    let gens: Vec<Vec<Rat>> = kernel
        .iter()
        .map(|x| {
            let x: Vec<Rat> = x.iter().map(|c| Rat::from_integer(c.clone())).collect();
            b.mul_vec(&x)
        })
        .collect();
    basis_from_generators(n, &gens)
}

/// Standard basis of Z^n as rational vectors.
pub fn standard_basis(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(BigInt::from(u8::from(i == j))))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::{int, rat};

    #[test]
    fn diagonal_sublattice() {
        let sub = vec![vec![int(2), int(0)], vec![int(0), int(3)]];
        assert_eq!(
            lattice_index(&sub, &standard_basis(2)).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(lattice_index(&sub, &sub).unwrap(), BigInt::from(1));
    }

    #[test]
    fn z5_squared_overlattice() {
        let mut sup = standard_basis(3);
        sup.push(vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
        sup.push(vec![rat(1, 5), rat(1, 5), rat(3, 5)]);
        assert_eq!(
            lattice_index(&standard_basis(3), &sup).unwrap(),
            BigInt::from(25)
        );
    }

    #[test]
    fn errors() {
        let line = vec![vec![int(1), int(1)]];
        assert_eq!(
            lattice_index(&line, &standard_basis(2)),
            Err(LatticeError::RankMismatch { sub: 1, sup: 2 })
        );
        let half = vec![vec![rat(1, 2), int(0)], vec![int(0), int(1)]];
        assert_eq!(
            lattice_index(&half, &standard_basis(2)),
            Err(LatticeError::NotContained)
        );
    }

    #[test]
    fn diagonal_intersection() {
        let mut n = standard_basis(2);
        n.push(vec![rat(1, 2), rat(1, 2)]);
        let l = intersect_with_subspace(2, &n, &[vec![int(1), int(1)]]);
        assert_eq!(l, vec![vec![rat(1, 2), rat(1, 2)]]);
        let m = intersect_with_subspace(2, &standard_basis(2), &[vec![int(1), int(1)]]);
        assert_eq!(lattice_index(&m, &l).unwrap(), BigInt::from(2));
    }
}
