use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "IntMat{rows:?}")
    }
}

/// Result of [`IntMat::smith_normal_form`]: `u * a * v == d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Smith {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    /// Smith normal form with unimodular transforms.
    ///
    /// The pivot is always the nonzero entry of smallest absolute value in the
    /// active block, ties broken by row-major position.
    pub fn smith_normal_form(&self) -> Smith {
        let (r, c) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(r);
        let mut v = Self::identity(c);
        for t in 0..r.min(c) {
            loop {
                let Some((pi, pj)) = d.smallest_entry(t) else {
                    return Smith { u, d, v };
                };
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);

                let mut clean = true;
                for i in t + 1..r {
                    if d.get(i, t).is_zero() {
                        continue;
                    }
                    let q = -(d.get(i, t).div_floor(d.get(t, t)));
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    clean &= d.get(i, t).is_zero();
                }
                for j in t + 1..c {
                    if d.get(t, j).is_zero() {
                        continue;
                    }
                    let q = -(d.get(t, j).div_floor(d.get(t, t)));
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    clean &= d.get(t, j).is_zero();
                }
                if !clean {
                    continue;
                }
                let pivot = d.get(t, t).clone();
                let offender =
                    (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                    }
                    None => break,
                }
            }
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        Smith { u, d, v }
    }

    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.abs() < self.get(bi, bj).abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Row-style Hermite normal form of the row lattice: upper echelon, positive
    /// pivots, entries above each pivot reduced into `[0, pivot)`. Zero rows are
    /// dropped.
    pub fn hermite_normal_form(&self) -> Self {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Euclid on column c among rows r..
            loop {
                let Some(p) = (r..m.rows)
                    .filter(|&i| !m.get(i, c).is_zero())
                    .min_by(|&a, &b| m.get(a, c).abs().cmp(&m.get(b, c).abs()))
                else {
                    break;
                };
                m.swap_rows(r, p);
                let mut done = true;
                for i in r + 1..m.rows {
                    if m.get(i, c).is_zero() {
                        continue;
                    }
                    let q = -(m.get(i, c).div_floor(m.get(r, c)));
                    m.add_row(i, r, &q);
                    done &= m.get(i, c).is_zero();
                }
                if done {
                    break;
                }
            }
            if m.get(r, c).is_zero() {
                continue;
            }
            if m.get(r, c).is_negative() {
                m.negate_row(r);
            }
            for i in 0..r {
                let q = -(m.get(i, c).div_floor(m.get(r, c)));
                m.add_row(i, r, &q);
            }
            r += 1;
        }
        let keep: Vec<Vec<BigInt>> = (0..r).map(|i| m.row(i).to_vec()).collect();
        if keep.is_empty() {
            return Self::zeros(0, self.cols);
        }
        Self::from_rows(&keep)
    }

    /// Basis (column vectors) of the integer kernel `{x in Z^cols : self * x = 0}`.
    pub fn integer_kernel(&self) -> Vec<Vec<BigInt>> {
        let snf = self.smith_normal_form();
        let k = snf.rank();
        (k..self.cols).map(|j| snf.v.column(j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(a: &IntMat) -> Smith {
        let s = a.smith_normal_form();
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
        s
    }

    #[test]
    fn smith_identity() {
        let s = check_smith(&IntMat::identity(2));
        assert_eq!(s.d, IntMat::identity(2));
    }

    #[test]
    fn smith_coprime_diagonal() {
        let s = check_smith(&IntMat::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d, IntMat::from_i64(&[&[1, 0], &[0, 6]]));
    }

    #[test]
    fn smith_two_by_two() {
        let s = check_smith(&IntMat::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.d, IntMat::from_i64(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn smith_rectangular_rank_deficient() {
        let a = IntMat::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let s = check_smith(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::one()]);
        let ker = a.integer_kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = IntMat::from_rows(&v.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
            assert!(a.mul(&col).is_zero());
        }
    }

    #[test]
    fn bareiss_determinant() {
        let a = IntMat::from_i64(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        assert_eq!(a.determinant(), BigInt::from(-4));
        assert_eq!(
            IntMat::from_i64(&[&[1, 2], &[2, 4]]).determinant(),
            BigInt::zero()
        );
    }

    #[test]
    fn hermite_form() {
        let h = IntMat::from_i64(&[&[2, 4], &[6, 8], &[4, 4]]).hermite_normal_form();
        assert_eq!(h, IntMat::from_i64(&[&[2, 0], &[0, 4]]));
    }
}
