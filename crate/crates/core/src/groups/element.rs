use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactmath::CycloInt;

/// Square matrix over cyclotomic integers.
#[derive(Clone)]
pub struct GroupElement {
    n: usize,
    entries: Vec<CycloInt>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for GroupElement {}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[[a,b],[c,d]]` with entries in `z<m>^<k>` notation.
impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl GroupElement {
    /// Builds from row-major entries; panics unless there are n² of them.
    pub fn new(n: usize, entries: Vec<CycloInt>) -> Self {
        assert_eq!(entries.len(), n * n, "expected {} entries", n * n);
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<CycloInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &CycloInt::one(1))
    }

    pub fn scalar(n: usize, c: &CycloInt) -> Self {
        let m = c.conductor();
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    c.clone()
                } else {
                    CycloInt::zero(m)
                }
            })
            .collect();
        Self { n, entries }
    }

    /// diag(ζ_m^{e_1}, ..., ζ_m^{e_n}).
    pub fn diagonal_roots(m: u64, exponents: &[i64]) -> Self {
        let n = exponents.len();
        let mut entries = vec![CycloInt::zero(m); n * n];
        for (i, &e) in exponents.iter().enumerate() {
            entries[i * n + i] = CycloInt::zeta(m, e);
        }
        Self { n, entries }
    }

    /// Matrix sending basis vector e_j to e_{perm[j]} (so x_i ↦ x_{perm⁻¹(i)}).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut entries = vec![CycloInt::zero(1); n * n];
        for (j, &p) in perm.iter().enumerate() {
            entries[p * n + j] = CycloInt::one(1);
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[CycloInt] {
        &self.entries
    }

    /// Least common conductor of the entries.
    pub fn conductor(&self) -> u64 {
        self.entries
            .iter()
            .fold(1, |acc, x| acc.lcm(&x.conductor()))
    }

    /// Every entry rewritten at conductor `m` (a multiple of each entry's).
    pub fn lift(&self, m: u64) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|x| x.lift(m)).collect(),
        }
    }

    /// Flattened coefficient vector at conductor `m`; the canonical ordering key.
    pub fn key_at(&self, m: u64) -> Vec<BigInt> {
        self.entries.iter().flat_map(|x| x.key_at(m)).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let m = self.conductor().lcm(&other.conductor());
        let mut entries = vec![CycloInt::zero(m); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * n + j;
                        entries[idx] = &entries[idx] + &(a * b);
                    }
                }
            }
        }
        Self { n, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Determinant by fraction-free elimination with exact ring division.
    pub fn determinant(&self) -> CycloInt {
        let n = self.n;
        let m = self.conductor();
        if n == 0 {
            return CycloInt::one(m);
        }
        let mut a: Vec<CycloInt> = self.entries.iter().map(|x| x.lift(m)).collect();
        let mut negate = false;
        let mut prev = CycloInt::one(m);
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return CycloInt::zero(m);
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&a[i * n + j] * &a[k * n + k]) - &(&a[i * n + k] * &a[k * n + j]);
                    a[i * n + j] = t.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n;
        let entries = (0..n)
            .filter(|&i| i != row)
            .flat_map(|i| {
                (0..n)
                    .filter(move |&j| j != col)
                    .map(move |j| self.get(i, j).clone())
            })
            .collect();
        Self { n: n - 1, entries }
    }

    /// Classical adjugate, so that `self * adj = det * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let m = self.conductor();
        if n == 1 {
            return Self::new(1, vec![CycloInt::one(m)]);
        }
        let mut entries = vec![CycloInt::zero(m); n * n];
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(j, i).determinant();
                entries[i * n + j] = if (i + j) % 2 == 0 { d } else { -&d };
            }
        }
        Self { n, entries }
    }

    /// Divides every entry by `c`, if the result is integral.
    pub fn div_scalar(&self, c: &CycloInt) -> Option<Self> {
        let entries = self
            .entries
            .iter()
            .map(|x| x.div_exact(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self { n: self.n, entries })
    }

    /// Exact inverse, if the determinant is a unit of the ring.
    pub fn inverse(&self) -> Option<Self> {
        self.adjugate().div_scalar(&self.determinant())
    }

    /// `self * x * self⁻¹`, computed as `self * x * adj(self) / det(self)`.
    pub fn conjugate(&self, x: &Self) -> Option<Self> {
        self.mul(x)
            .mul(&self.adjugate())
            .div_scalar(&self.determinant())
    }

    /// Representative of the class modulo roots-of-unity scalars: divides by
    /// the first nonzero diagonal entry (or the first nonzero entry if the
    /// diagonal vanishes).
    pub fn scalar_normalized(&self) -> Self {
        let n = self.n;
        let pivot = (0..n)
            .map(|i| self.get(i, i))
            .find(|x| !x.is_zero())
            .or_else(|| self.entries.iter().find(|x| !x.is_zero()))
            .expect("zero matrix has no normalization");
        if pivot.is_one() {
            return self.clone();
        }
        let m = self.conductor();
        self.div_scalar(pivot)
            .expect("normalizing entry must be a unit")
            .lift(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse() {
        let j = GroupElement::from_rows(vec![
            vec![CycloInt::zero(1), CycloInt::one(1)],
            vec![CycloInt::from_int(1, -1), CycloInt::zero(1)],
        ]);
        assert!(j.determinant().is_one());
        assert!(j.mul(&j.inverse().unwrap()).is_identity());
        let d = GroupElement::diagonal_roots(5, &[1, 2, 2]);
        assert!(d.determinant().is_one());
        assert_eq!(
            d.inverse().unwrap(),
            GroupElement::diagonal_roots(5, &[4, 3, 3])
        );
    }

    #[test]
    fn conjugation_by_non_unit_determinant() {
        // h has determinant 2 but still conjugates i·σ_z to an integral matrix.
        let h = GroupElement::from_rows(vec![
            vec![CycloInt::from_int(1, 1), CycloInt::from_int(1, 1)],
            vec![CycloInt::from_int(1, -1), CycloInt::from_int(1, 1)],
        ]);
        assert_eq!(h.determinant(), CycloInt::from_int(1, 2));
        let x = GroupElement::diagonal_roots(4, &[1, 3]);
        let y = h.conjugate(&x).unwrap();
        assert_eq!(h.mul(&x), y.mul(&h));
    }

    #[test]
    fn scalar_normalization() {
        let g = GroupElement::diagonal_roots(5, &[1, 4, 0]);
        assert_eq!(
            g.scalar_normalized(),
            GroupElement::diagonal_roots(5, &[0, 3, 4])
        );
    }

    #[test]
    fn permutation_matrix() {
        let p = GroupElement::permutation(&[1, 2, 0]);
        let v = GroupElement::diagonal_roots(3, &[0, 1, 2]);
        // conjugating a diagonal matrix by a permutation permutes its entries
        let w = p.mul(&v).mul(&p.inverse().unwrap());
        assert_eq!(w, GroupElement::diagonal_roots(3, &[2, 0, 1]));
    }
}
