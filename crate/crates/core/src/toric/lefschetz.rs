//! Lefschetz number of σ on the toric resolution as a sum over σ-invariant torus
//! orbits, each contributing det(I − σ_*) on the lattice of its orbit torus.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactmath::lattice::{coordinates, intersect_with_subspace, lattice_index};
use crate::exactmath::rat::format_rat;
use crate::exactmath::{IntMat, RatMat};

use super::geometry::Point;
use super::lattice_pair::LatticePair;
use super::perm::PermSymmetry;
use super::triangulation::Triangulation;
use super::ToricError;

/// A σ-invariant face with the action of σ on N / (N ∩ span of the cone over it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub face: Vec<usize>,
    /// Lifts to N of a basis of the quotient lattice.
    pub quotient_basis: Vec<Point>,
    pub action: IntMat,
    pub contribution: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub face: Vec<usize>,
    pub rank: usize,
    pub contribution: String,
    pub quotient_basis: Vec<Vec<String>>,
}

impl OrbitRecord {
    pub fn summary(&self) -> OrbitSummary {
        OrbitSummary {
            face: self.face.clone(),
            rank: self.action.rows(),
            contribution: self.contribution.to_string(),
            quotient_basis: self
                .quotient_basis
                .iter()
                .map(|v| v.iter().map(format_rat).collect())
                .collect(),
        }
    }
}

fn to_int(m: &RatMat) -> IntMat {
    let mut out = IntMat::zeros(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let x = m.get(i, j);
            assert!(x.is_integer(), "lattice automorphism has integral entries");
            out.set(i, j, x.to_integer());
        }
    }
    out
}

/// det(I − A) for a square integer matrix; 1 for the empty matrix.
pub fn det_i_minus(a: &IntMat) -> BigInt {
    let k = a.rows();
    let mut m = IntMat::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let id = if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            m.set(i, j, id - a.get(i, j));
        }
    }
    if k == 0 {
        BigInt::one()
    } else {
        m.determinant()
    }
}

/// σ written in the Hermite basis of N.
pub fn action_on_n(lp: &LatticePair, s: &PermSymmetry) -> IntMat {
    let n = lp.n();
    let b = RatMat::from_columns(n, lp.basis());
    let p = RatMat::from_int(&s.matrix());
    let binv = b.inverse().expect("N has full rank");
    to_int(&binv.mul(&p).mul(&b))
}

pub fn orbit_records(
    t: &Triangulation,
    lp: &LatticePair,
    s: &PermSymmetry,
) -> Result<Vec<OrbitRecord>, ToricError> {
    let n = lp.n();
    if t.n() != n || s.n() != n {
        return Err(ToricError::DimensionMismatch {
            expected: n,
            found: if t.n() != n { t.n() } else { s.n() },
        });
    }
    if !s.preserves(lp) {
        return Err(ToricError::NotPreserved);
    }
    let perm = match t.vertex_permutation(s) {
        Some(p) if t.is_invariant(s) => p,
        _ => return Err(ToricError::NotInvariantTriangulation),
    };
    let basis = lp.basis();
    let b = RatMat::from_columns(n, basis);
    let sigma = RatMat::from_int(&action_on_n(lp, s));

    let mut out = Vec::new();
    for face in t.faces() {
        if Triangulation::map_simplex(&perm, &face) != face {
            continue;
        }
        let points = t.points_of(&face);
        let sub = intersect_with_subspace(n, basis, &points);
        let r = sub.len();
        // Sub-basis in N coordinates; the Smith form completes it to a basis of N.
        let mut c = IntMat::zeros(n, r);
        for (j, v) in sub.iter().enumerate() {
            let x = coordinates(basis, v).expect("sublattice of N");
            for (i, xi) in x.into_iter().enumerate() {
                c.set(i, j, xi.to_integer());
            }
        }
        let (u, uinv) = if r == 0 {
            (RatMat::identity(n), RatMat::identity(n))
        } else {
            let smith = c.smith_normal_form();
            let u = RatMat::from_int(&smith.u);
            let uinv = u.inverse().expect("unimodular");
            (u, uinv)
        };
        let a = to_int(&u.mul(&sigma).mul(&uinv));
        let mut a22 = IntMat::zeros(n - r, n - r);
        for i in r..n {
            for j in r..n {
                a22.set(i - r, j - r, a.get(i, j).clone());
            }
        }
        let quotient_basis = (r..n).map(|j| b.mul_vec(&uinv.column(j))).collect();
        let contribution = det_i_minus(&a22);
        out.push(OrbitRecord {
            face,
            quotient_basis,
            action: a22,
            contribution,
        });
    }
    Ok(out)
}

pub fn toric_lefschetz(
    t: &Triangulation,
    lp: &LatticePair,
    s: &PermSymmetry,
) -> Result<BigInt, ToricError> {
    Ok(orbit_records(t, lp, s)?
        .into_iter()
        .map(|r| r.contribution)
        .sum())
}

/// Invariant faces that are facets of an invariant face whose extra vertex is σ-fixed,
/// with their orbit contributions.
pub fn faces_below_fixed_ray(
    t: &Triangulation,
    lp: &LatticePair,
    s: &PermSymmetry,
) -> Result<Vec<(Vec<usize>, BigInt)>, ToricError> {
    let records = orbit_records(t, lp, s)?;
    let perm = t.vertex_permutation(s).expect("checked by orbit_records");
    let invariant: std::collections::BTreeSet<&Vec<usize>> =
        records.iter().map(|r| &r.face).collect();
    Ok(records
        .iter()
        .filter(|r| {
            (0..t.vertices().len()).any(|v| {
                if perm[v] != v || r.face.contains(&v) {
                    return false;
                }
                let mut bigger = r.face.clone();
                bigger.push(v);
                bigger.sort_unstable();
                invariant.contains(&bigger)
            })
        })
        .map(|r| (r.face.clone(), r.contribution.clone()))
        .collect())
}

/// The s×s block with ones on the superdiagonal and −1 across the last row.
pub fn companion_block(s: usize) -> IntMat {
    let mut a = IntMat::zeros(s, s);
    for i in 0..s.saturating_sub(1) {
        a.set(i, i + 1, BigInt::one());
    }
    if s > 0 {
        for j in 0..s {
            a.set(s - 1, j, -BigInt::one());
        }
    }
    a
}

pub fn companion_block_det(s: usize) -> BigInt {
    det_i_minus(&companion_block(s))
}

/// Contribution of a cycle block: det(I − A_s), where a length-1 block is a
/// σ-fixed direction (A_1 = 1) and longer blocks use the companion form.
pub fn block_det(s: usize) -> BigInt {
    assert!(s >= 1, "block size is positive");
    if s == 1 {
        det_i_minus(&IntMat::identity(1))
    } else {
        companion_block_det(s)
    }
}

/// |H^σ| by enumerating H.
pub fn count_fixed_elements(lp: &LatticePair, s: &PermSymmetry) -> usize {
    lp.elements().iter().filter(|h| s.apply(h) == **h).count()
}

/// [N ∩ L : M ∩ L], with M ∩ L spanned by the cycle sums.
pub fn fixed_lattice_index(lp: &LatticePair, s: &PermSymmetry) -> BigInt {
    let l = s.fixed_subspace();
    let nl = intersect_with_subspace(lp.n(), lp.basis(), &l);
    lattice_index(&l, &nl).expect("M ∩ L has full rank in N ∩ L")
}
