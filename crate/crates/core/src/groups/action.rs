use std::collections::BTreeSet;

use super::element::GroupElement;
use super::group::{ConjClassSet, FiniteMatrixGroup};
use super::GroupError;

/// Conjugation by a matrix `h` normalizing a group.
#[derive(Debug, Clone)]
pub struct OuterAction {
    h: GroupElement,
    element_perm: Vec<usize>,
    classes: ConjClassSet,
    class_perm: Vec<usize>,
}

impl OuterAction {
    /// Computes the permutations induced by `x ↦ h x h⁻¹`.
    ///
    /// `h` may have a non-unit determinant; only the conjugates need to be integral.
    pub fn new(g: &FiniteMatrixGroup, h: &GroupElement) -> Result<Self, GroupError> {
        if h.dim() != g.dim() {
            return Err(GroupError::DimensionMismatch);
        }
        let det = h.determinant();
        if det.is_zero() {
            return Err(GroupError::Singular);
        }
        let adj = h.adjugate();
        let mut element_perm = Vec::with_capacity(g.order());
        for x in g.elements() {
            let y = h
                .mul(x)
                .mul(&adj)
                .div_scalar(&det)
                .ok_or(GroupError::NotNormalizing)?;
            element_perm.push(g.index_of(&y).ok_or(GroupError::NotNormalizing)?);
        }
        let distinct: BTreeSet<usize> = element_perm.iter().copied().collect();
        if distinct.len() != g.order() {
            return Err(GroupError::NotNormalizing);
        }
        let classes = g.conjugacy_classes();
        let mut class_perm = Vec::with_capacity(classes.len());
        for members in &classes.classes {
            let image = classes.class_of[element_perm[members[0]]];
            if members
                .iter()
                .any(|&x| classes.class_of[element_perm[x]] != image)
            {
                return Err(GroupError::NotNormalizing);
            }
            class_perm.push(image);
        }
        Ok(Self {
            h: h.clone(),
            element_perm,
            classes,
            class_perm,
        })
    }

    pub fn h(&self) -> &GroupElement {
        &self.h
    }

    pub fn element_perm(&self) -> &[usize] {
        &self.element_perm
    }

    pub fn classes(&self) -> &ConjClassSet {
        &self.classes
    }

    pub fn class_perm(&self) -> &[usize] {
        &self.class_perm
    }

    /// Image `h S h⁻¹` of a subset of element indices.
    pub fn image(&self, subset: &[usize]) -> BTreeSet<usize> {
        subset.iter().map(|&x| self.element_perm[x]).collect()
    }

    pub fn is_invariant(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        self.image(subset) == set
    }

    /// Number of classes fixed by the induced class permutation.
    pub fn invariant_class_count(&self) -> usize {
        self.class_perm
            .iter()
            .enumerate()
            .filter(|(c, &p)| *c == p)
            .count()
    }

    pub fn invariant_classes(&self) -> Vec<usize> {
        (0..self.class_perm.len())
            .filter(|&c| self.class_perm[c] == c)
            .collect()
    }

    /// Number of elements with `h x h⁻¹ = x`.
    pub fn fixed_element_count(&self) -> usize {
        self.element_perm
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x == y)
            .count()
    }

    /// True iff `h x h⁻¹` is conjugate to `x` by an element of `subset`.
    fn class_fixed_within(&self, g: &FiniteMatrixGroup, subset: &[usize], x: usize) -> bool {
        let y = self.element_perm[x];
        subset.iter().any(|&s| g.conjugate_index(s, x) == y)
    }

    /// con(h, S): number of S-conjugacy classes of an h-invariant subgroup S
    /// (given by element indices) that h maps to themselves.
    pub fn invariant_class_count_in(&self, g: &FiniteMatrixGroup, subset: &[usize]) -> usize {
        let mut done = BTreeSet::new();
        let mut count = 0;
        for &x in subset {
            if done.contains(&x) {
                continue;
            }
            for &s in subset {
                done.insert(g.conjugate_index(s, x));
            }
            if self.class_fixed_within(g, subset, x) {
                count += 1;
            }
        }
        count
    }
}

/// Classes whose representative x satisfies: for every h-invariant stabilizer S
/// containing x (the supplied ones and the whole group), `h x h⁻¹` is
/// S-conjugate to x.
pub fn ch_filter(
    g: &FiniteMatrixGroup,
    action: &OuterAction,
    stabilizers: &[FiniteMatrixGroup],
) -> Result<BTreeSet<usize>, GroupError> {
    let subsets: Vec<Vec<usize>> = stabilizers
        .iter()
        .map(|s| g.embed(s))
        .collect::<Result<_, _>>()?;
    Ok(ch_filter_indices(g, action, &subsets))
}

/// [`ch_filter`] with stabilizers already given as element-index subgroups.
pub fn ch_filter_indices(
    g: &FiniteMatrixGroup,
    action: &OuterAction,
    subsets: &[Vec<usize>],
) -> BTreeSet<usize> {
    let invariant: Vec<(&Vec<usize>, BTreeSet<usize>)> = subsets
        .iter()
        .filter(|s| action.is_invariant(s))
        .map(|s| (s, s.iter().copied().collect()))
        .collect();
    let whole: Vec<usize> = (0..g.order()).collect();
    action
        .classes()
        .representatives
        .iter()
        .enumerate()
        .filter(|&(_, &x)| {
            action.class_fixed_within(g, &whole, x)
                && invariant
                    .iter()
                    .filter(|(_, set)| set.contains(&x))
                    .all(|(s, _)| action.class_fixed_within(g, s, x))
        })
        .map(|(c, _)| c)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group::{close_group, DEFAULT_CAP};

    #[test]
    fn identity_action_fixes_everything() {
        let g = close_group(&[GroupElement::diagonal_roots(6, &[1, 5])], DEFAULT_CAP).unwrap();
        let a = OuterAction::new(&g, &GroupElement::identity(2)).unwrap();
        assert_eq!(a.element_perm(), (0..6).collect::<Vec<_>>().as_slice());
        assert_eq!(a.invariant_class_count(), 6);
        assert_eq!(ch_filter(&g, &a, &[]).unwrap().len(), 6);
    }

    #[test]
    fn non_normalizing_matrix_is_rejected() {
        let g = close_group(&[GroupElement::diagonal_roots(3, &[1, 2, 0])], DEFAULT_CAP).unwrap();
        let h = GroupElement::permutation(&[0, 2, 1]);
        assert!(matches!(
            OuterAction::new(&g, &h),
            Err(GroupError::NotNormalizing)
        ));
    }
}
