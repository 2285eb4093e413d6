use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactmath::{IntMat, Rat};

use super::lattice_pair::LatticePair;
use super::ToricError;

/// Coordinate permutation σ with σ(e_i) = e_{perm[i]}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermSymmetry {
    perm: Vec<usize>,
}

impl PermSymmetry {
    pub fn new(perm: Vec<usize>) -> Result<Self, ToricError> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(ToricError::BadPermutation(format!("{perm:?}")));
            }
            seen[p] = true;
        }
        Ok(Self { perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
        }
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4)`; an empty string is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self, ToricError> {
        let bad = || ToricError::BadPermutation(text.to_string());
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let items: Vec<usize> = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            for &i in &items {
                if i == 0 || i > n || used[i - 1] {
                    return Err(bad());
                }
                used[i - 1] = true;
            }
            for (k, &i) in items.iter().enumerate() {
                perm[i - 1] = items[(k + 1) % items.len()] - 1;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Self { perm })
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, ToricError> {
        let mut perm: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                if i >= n {
                    return Err(ToricError::BadPermutation(format!("{cycles:?}")));
                }
                perm[i] = c[(k + 1) % c.len()];
            }
        }
        Self::new(perm)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    /// Cycles (0-based) in order of their smallest element, fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.perm[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.perm[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths sorted in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, |acc, l| acc.lcm(&l))
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            perm: other.perm.iter().map(|&j| self.perm[j]).collect(),
        }
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.n()), |acc, _| acc.compose(self))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        Self { perm: inv }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.perm[i]] = x.clone();
        }
        out
    }

    /// Permutation matrix in the standard basis.
    pub fn matrix(&self) -> IntMat {
        let n = self.n();
        let mut m = IntMat::zeros(n, n);
        for (j, &i) in self.perm.iter().enumerate() {
            m.set(i, j, BigInt::one());
        }
        m
    }

    /// True iff σ maps N to itself.
    pub fn preserves(&self, lp: &LatticePair) -> bool {
        self.n() == lp.n() && lp.elements().iter().all(|h| lp.contains(&self.apply(h)))
    }

    /// Cycle-sum vectors spanning the fixed subspace L.
    pub fn fixed_subspace(&self) -> Vec<Vec<Rat>> {
        self.cycles()
            .into_iter()
            .map(|c| {
                let mut v = vec![Rat::zero(); self.n()];
                for i in c {
                    v[i] = Rat::one();
                }
                v
            })
            .collect()
    }

    pub fn fixes(&self, v: &[Rat]) -> bool {
        self.apply(v) == v
    }

    /// 1-based cycle notation, fixed points omitted.
    pub fn to_cycle_string(&self) -> String {
        self.cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let items: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", items.join(" "))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat::int;

    #[test]
    fn parse_and_cycle_type() {
        let s = PermSymmetry::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(s.cycle_type(), vec![3, 2]);
        assert_eq!(s.order(), 6);
        assert_eq!(s.to_cycle_string(), "(1 2)(3 4 5)");
        assert!(PermSymmetry::parse_cycles(3, "(1 4)").is_err());
        assert!(PermSymmetry::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(PermSymmetry::parse_cycles(3, "").unwrap().is_identity());
    }

    #[test]
    fn fixed_subspaces() {
        assert_eq!(PermSymmetry::identity(3).fixed_subspace().len(), 3);
        let swap = PermSymmetry::parse_cycles(2, "(1 2)").unwrap();
        assert_eq!(swap.fixed_subspace(), vec![vec![int(1), int(1)]]);
        let c3 = PermSymmetry::parse_cycles(3, "(1 2 3)").unwrap();
        assert_eq!(c3.fixed_subspace(), vec![vec![int(1), int(1), int(1)]]);
    }

    #[test]
    fn apply_matches_matrix() {
        let s = PermSymmetry::parse_cycles(3, "(1 2 3)").unwrap();
        let v = vec![int(1), int(2), int(3)];
        let m = crate::exactmath::RatMat::from_int(&s.matrix());
        assert_eq!(s.apply(&v), m.mul_vec(&v));
        assert_eq!(
            s.apply(&[int(1), int(0), int(0)]),
            vec![int(0), int(1), int(0)]
        );
        assert_eq!(s.power(3), PermSymmetry::identity(3));
        assert_eq!(s.compose(&s.inverse()), PermSymmetry::identity(3));
    }
}
