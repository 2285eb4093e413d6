//! Invariant conjugacy classes against Lefschetz numbers of resolutions.

use num_bigint::BigInt;
use serde::Serialize;

use crate::groups::fixtures::{
    binary_dihedral, binary_tetrahedral, cyclic, d4_triality, CyclicAction, GroupFixture,
};
use crate::groups::{close_group, GroupElement, OuterAction, DEFAULT_CAP};
use crate::toric::{
    adjusted_triangulation, count_fixed_elements, toric_lefschetz, LatticePair, PermSymmetry,
};

use super::dynkin::{dynkin_lefschetz, DynkinGraph};
use super::OrbifoldError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McKayReport {
    pub group: String,
    pub order: usize,
    pub classes: usize,
    pub invariant_classes: usize,
    pub graph: String,
    pub lefschetz: usize,
    pub agree: bool,
}

pub fn mckay_check(
    fixture: &GroupFixture,
    graph: &DynkinGraph,
) -> Result<McKayReport, OrbifoldError> {
    let (g, action) = fixture.build(DEFAULT_CAP)?;
    let invariant = action.invariant_class_count();
    let lefschetz = dynkin_lefschetz(graph);
    Ok(McKayReport {
        group: fixture.name.clone(),
        order: g.order(),
        classes: action.classes().len(),
        invariant_classes: invariant,
        graph: graph.name.clone(),
        lefschetz,
        agree: invariant == lefschetz,
    })
}

/// Surface cases: cyclic groups (even order) with the quarter rotation, binary
/// dihedral D_r for 3 ≤ r ≤ 8, D_4 with triality and the binary tetrahedral group.
pub fn ade_cases() -> Vec<(GroupFixture, DynkinGraph)> {
    let mut out = Vec::new();
    for n in [2u64, 4, 6, 8, 10, 12] {
        out.push((
            cyclic(n, CyclicAction::Rotation),
            DynkinGraph::a_chain(n as usize - 1, true),
        ));
    }
    for r in 3..=8u64 {
        out.push((binary_dihedral(r), DynkinGraph::d_graph(r as usize, true)));
    }
    out.push((d4_triality(), DynkinGraph::d4_triality()));
    out.push((binary_tetrahedral(), DynkinGraph::e6(true)));
    out
}

/// Toric side against the group side for a diagonal group H and a coordinate
/// permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricMcKayReport {
    pub order: usize,
    pub lefschetz: String,
    pub fixed_elements: usize,
    pub invariant_classes: usize,
    pub agree: bool,
}

/// H as a matrix group: diag(ζ_m^{a_1}, ..., ζ_m^{a_n}) for each generator a@m.
pub fn diagonal_group_generators(lp: &LatticePair) -> Vec<GroupElement> {
    let mut gens: Vec<GroupElement> = lp
        .generators()
        .iter()
        .map(|g| GroupElement::diagonal_roots(g.modulus, &g.exponents))
        .collect();
    if gens.is_empty() {
        gens.push(GroupElement::identity(lp.n()));
    }
    gens
}

pub fn toric_mckay(lp: &LatticePair, s: &PermSymmetry) -> Result<ToricMcKayReport, OrbifoldError> {
    let g = close_group(&diagonal_group_generators(lp), DEFAULT_CAP)?;
    let action = OuterAction::new(&g, &GroupElement::permutation(s.images()))?;
    let t = adjusted_triangulation(lp, s)?;
    let l = toric_lefschetz(&t, lp, s)?;
    let fixed = count_fixed_elements(lp, s);
    let invariant = action.invariant_class_count();
    Ok(ToricMcKayReport {
        order: g.order(),
        lefschetz: l.to_string(),
        fixed_elements: fixed,
        invariant_classes: invariant,
        agree: g.order() == lp.order() && l == BigInt::from(fixed) && fixed == invariant,
    })
}
