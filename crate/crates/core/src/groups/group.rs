use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;

use super::element::GroupElement;
use super::GroupError;

pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    pub cap: usize,
    /// Work modulo root-of-unity scalars (see [`GroupElement::scalar_normalized`]).
    pub projective: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            projective: false,
        }
    }
}

/// Explicit finite group of matrices with a full multiplication table.
///
/// Elements are sorted by canonical key, so index order is key order.
#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    n: usize,
    conductor: u64,
    projective: bool,
    elements: Vec<GroupElement>,
    lookup: HashMap<Vec<BigInt>, usize>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

/// Partition of a group into conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassSet {
    /// Element indices of each class, ascending; classes ordered by representative.
    pub classes: Vec<Vec<usize>>,
    /// Minimal-key element of each class.
    pub representatives: Vec<usize>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Smallest group containing `generators`, with the default linear options.
pub fn close_group(
    generators: &[GroupElement],
    cap: usize,
) -> Result<FiniteMatrixGroup, GroupError> {
    FiniteMatrixGroup::close(
        generators,
        ClosureOptions {
            cap,
            projective: false,
        },
    )
}

impl FiniteMatrixGroup {
    pub fn close(generators: &[GroupElement], opts: ClosureOptions) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::NoGenerators)?;
        let n = first.dim();
        if generators.iter().any(|g| g.dim() != n) {
            return Err(GroupError::DimensionMismatch);
        }
        if generators.iter().any(|g| g.determinant().is_zero()) {
            return Err(GroupError::Singular);
        }
        let conductor = generators
            .iter()
            .fold(1u64, |acc, g| acc.lcm(&g.conductor()));
        let normalize = |g: GroupElement| -> GroupElement {
            let g = if opts.projective {
                g.scalar_normalized()
            } else {
                g
            };
            g.lift(conductor)
        };
        let gens: Vec<GroupElement> = generators.iter().cloned().map(normalize).collect();

        let identity = normalize(GroupElement::identity(n));
        let mut seen: HashMap<Vec<BigInt>, GroupElement> = HashMap::new();
        seen.insert(identity.key_at(conductor), identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = normalize(x.mul(s));
                let key = y.key_at(conductor);
                if !seen.contains_key(&key) {
                    if seen.len() >= opts.cap {
                        return Err(GroupError::CapExceeded { cap: opts.cap });
                    }
                    seen.insert(key, y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut entries: Vec<(Vec<BigInt>, GroupElement)> = seen.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Self::from_sorted(n, conductor, opts.projective, entries))
    }

    fn from_sorted(
        n: usize,
        conductor: u64,
        projective: bool,
        entries: Vec<(Vec<BigInt>, GroupElement)>,
    ) -> Self {
        let lookup: HashMap<Vec<BigInt>, usize> = entries
            .iter()
            .enumerate()
            .map(|(i, (k, _))| (k.clone(), i))
            .collect();
        let elements: Vec<GroupElement> = entries.into_iter().map(|(_, g)| g).collect();
        let normalize = |g: GroupElement| {
            if projective {
                g.scalar_normalized().lift(conductor)
            } else {
                g.lift(conductor)
            }
        };
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| {
                        let key = normalize(a.mul(b)).key_at(conductor);
                        *lookup
                            .get(&key)
                            .expect("closure is multiplicatively closed")
                    })
                    .collect()
            })
            .collect();
        let identity = *lookup
            .get(&normalize(GroupElement::identity(n)).key_at(conductor))
            .expect("group contains the identity");
        let inverse = table
            .iter()
            .map(|row| {
                row.iter()
                    .position(|&p| p == identity)
                    .expect("every element has an inverse")
            })
            .collect();
        Self {
            n,
            conductor,
            projective,
            elements,
            lookup,
            table,
            inverse,
            identity,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    /// Index of `a * b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Index of `g * x * g⁻¹`.
    pub fn conjugate_index(&self, g: usize, x: usize) -> usize {
        self.table[self.table[g][x]][self.inverse[g]]
    }

    /// Brings a matrix into this group's normal form (scalar class, conductor).
    pub fn normalize(&self, g: &GroupElement) -> GroupElement {
        let g = if self.projective {
            g.scalar_normalized()
        } else {
            g.clone()
        };
        let c = g.conductor();
        if self.conductor.is_multiple_of(c) {
            g.lift(self.conductor)
        } else {
            g
        }
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        if g.dim() != self.n {
            return None;
        }
        let g = self.normalize(g);
        if self.conductor.is_multiple_of(g.conductor()) {
            return self.lookup.get(&g.key_at(self.conductor)).copied();
        }
        // Entries may only look like they need a larger conductor.
        self.elements.iter().position(|e| *e == g)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index_of(g).is_some()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn conjugacy_classes(&self) -> ConjClassSet {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..n).map(|g| self.conjugate_index(g, x)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members.into_iter().collect::<Vec<_>>());
        }
        // x runs in index order, so the first member found is the class minimum.
        let representatives = classes.iter().map(|c| c[0]).collect();
        ConjClassSet {
            classes,
            representatives,
            class_of,
        }
    }

    /// Indices of elements commuting with element `x`.
    pub fn centralizer_indices(&self, x: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&c| self.table[c][x] == self.table[x][c])
            .collect()
    }

    pub fn centralizer(&self, x: &GroupElement) -> Result<Self, GroupError> {
        let i = self.index_of(x).ok_or(GroupError::ElementNotInGroup)?;
        self.subgroup(&self.centralizer_indices(i))
    }

    /// True iff the index set is closed under products (hence a subgroup).
    pub fn is_subgroup(&self, indices: &[usize]) -> bool {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        !set.is_empty()
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.table[a][b])))
    }

    /// Subgroup on the given element indices.
    pub fn subgroup(&self, indices: &[usize]) -> Result<Self, GroupError> {
        if !self.is_subgroup(indices) {
            return Err(GroupError::StabilizerNotSubgroup);
        }
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        let keep: Vec<usize> = set.into_iter().collect();
        let position: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let elements: Vec<GroupElement> = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let lookup = keep
            .iter()
            .enumerate()
            .map(|(p, &i)| (self.elements[i].key_at(self.conductor), p))
            .collect();
        let table = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| position[&self.table[a][b]]).collect())
            .collect();
        let inverse = keep.iter().map(|&a| position[&self.inverse[a]]).collect();
        Ok(Self {
            n: self.n,
            conductor: self.conductor,
            projective: self.projective,
            elements,
            lookup,
            table,
            inverse,
            identity: position[&self.identity],
        })
    }

    /// Subgroup generated by the given element indices.
    pub fn generated_indices(&self, generators: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in generators {
                let y = self.table[x][s];
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Element indices of `other` (a subgroup given as its own group) inside `self`.
    pub fn embed(&self, other: &Self) -> Result<Vec<usize>, GroupError> {
        let indices = other
            .elements
            .iter()
            .map(|g| self.index_of(g).ok_or(GroupError::StabilizerNotSubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        if !self.is_subgroup(&indices) {
            return Err(GroupError::StabilizerNotSubgroup);
        }
        Ok(indices)
    }

    /// `g S g⁻¹` for a subgroup given by indices.
    pub fn conjugate_subset(&self, g: usize, subset: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = subset.iter().map(|&x| self.conjugate_index(g, x)).collect();
        set.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::CycloInt;

    #[test]
    fn trivial_group() {
        let g = close_group(&[GroupElement::identity(2)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let g = GroupElement::diagonal_roots(12, &[1, -1]);
        assert!(matches!(
            close_group(&[g], 5),
            Err(GroupError::CapExceeded { cap: 5 })
        ));
    }

    #[test]
    fn infinite_order_hits_cap() {
        let t = GroupElement::from_rows(vec![
            vec![CycloInt::one(1), CycloInt::one(1)],
            vec![CycloInt::zero(1), CycloInt::one(1)],
        ]);
        assert!(matches!(
            close_group(&[t], 50),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn elements_sorted_by_key() {
        let g = close_group(&[GroupElement::diagonal_roots(6, &[1, 5])], DEFAULT_CAP).unwrap();
        let keys: Vec<_> = g.elements().iter().map(|e| e.key_at(6)).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.order(), 6);
    }
}
