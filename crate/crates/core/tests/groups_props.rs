use std::collections::BTreeSet;

use mckay_core::groups::fixtures::{
    binary_dihedral, binary_tetrahedral, cyclic, d4_triality, lt_group, quintic, CyclicAction,
    GroupFixture, QuinticVariant,
};
use mckay_core::groups::{FiniteMatrixGroup, OuterAction, DEFAULT_CAP};
use proptest::prelude::*;

fn small_fixtures() -> Vec<GroupFixture> {
    let mut out = vec![binary_tetrahedral(), d4_triality()];
    out.extend((3..=6).map(binary_dihedral));
    out.extend((1..=8).map(|n| cyclic(n, CyclicAction::Rotation)));
    out
}

fn all_fixtures() -> Vec<GroupFixture> {
    let mut out = small_fixtures();
    out.push(quintic(QuinticVariant::Swap));
    out.push(lt_group());
    out
}

#[test]
fn class_equation_holds() {
    for f in all_fixtures() {
        let (g, a) = f.build_default().unwrap();
        let classes = a.classes();
        let mut total = 0;
        for (members, &rep) in classes.classes.iter().zip(&classes.representatives) {
            let c = g.centralizer_indices(rep).len();
            assert_eq!(members.len() * c, g.order(), "{}", f.name);
            total += g.order() / c;
            assert_eq!(members[0], rep);
        }
        assert_eq!(total, g.order(), "{}", f.name);
    }
}

#[test]
fn central_twist_leaves_invariant_count_unchanged() {
    for f in small_fixtures() {
        let (g, a) = f.build_default().unwrap();
        let center: Vec<usize> = (0..g.order())
            .filter(|&z| (0..g.order()).all(|x| g.product(z, x) == g.product(x, z)))
            .collect();
        for z in center {
            let twisted = a.h().mul(g.element(z));
            let b = OuterAction::new(&g, &twisted).unwrap();
            assert_eq!(
                b.invariant_class_count(),
                a.invariant_class_count(),
                "{}",
                f.name
            );
        }
    }
}

/// Every cyclic subgroup serves as a stabilizer candidate.
fn cyclic_subgroups(g: &FiniteMatrixGroup) -> BTreeSet<Vec<usize>> {
    (0..g.order()).map(|i| g.generated_indices(&[i])).collect()
}

#[test]
fn con_is_constant_on_invariant_conjugate_subgroups() {
    for f in small_fixtures() {
        let (g, a) = f.build_default().unwrap();
        for s in cyclic_subgroups(&g) {
            if !a.is_invariant(&s) {
                continue;
            }
            let con = a.invariant_class_count_in(&g, &s);
            for x in 0..g.order() {
                let t = g.conjugate_subset(x, &s);
                if a.is_invariant(&t) {
                    assert_eq!(a.invariant_class_count_in(&g, &t), con, "{}", f.name);
                }
            }
        }
    }
}

#[test]
fn determinants_are_one() {
    let mut fixtures = small_fixtures();
    fixtures.push(quintic(QuinticVariant::Swap));
    for f in fixtures {
        let (g, _) = f.build_default().unwrap();
        for e in g.elements() {
            assert!(e.determinant().is_one(), "{}: {e}", f.name);
        }
    }
}

#[test]
fn order_81_group_has_cube_root_determinants() {
    // det = ζ_3^{α1+α2+α4+α5} = ζ_3^{2μ}: the group acts on the cubics, not inside SL_6.
    let (g, _) = lt_group().build_default().unwrap();
    let mut nontrivial = 0;
    for e in g.elements() {
        let d = e.determinant();
        assert!(d.pow(3).is_one(), "{e}");
        if !d.is_one() {
            nontrivial += 1;
        }
    }
    assert_eq!(nontrivial, 54);
}

#[test]
fn action_permutations_are_consistent() {
    for f in all_fixtures() {
        let (g, a) = f.build_default().unwrap();
        let perm = a.element_perm();
        // conjugation is a homomorphism
        for x in 0..g.order() {
            for y in (0..g.order()).step_by(7) {
                assert_eq!(perm[g.product(x, y)], g.product(perm[x], perm[y]));
            }
        }
        let image: BTreeSet<usize> = a.class_perm().iter().copied().collect();
        assert_eq!(image.len(), a.classes().len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closure_ignores_generator_order(idx in 0usize..14, seed in any::<u64>()) {
        let fixtures = small_fixtures();
        let f = &fixtures[idx % fixtures.len()];
        let mut gens = f.generators.clone();
        // add redundant products and shuffle deterministically
        gens.push(gens[0].mul(gens.last().unwrap()));
        let len = gens.len();
        gens.rotate_left((seed as usize) % len);
        if seed % 2 == 1 {
            gens.reverse();
        }
        let a = FiniteMatrixGroup::close(&f.generators, Default::default()).unwrap();
        let b = FiniteMatrixGroup::close(&gens, Default::default()).unwrap();
        prop_assert_eq!(a.order(), b.order());
        for (x, y) in a.elements().iter().zip(b.elements()) {
            prop_assert_eq!(x, y);
        }
        prop_assert!(a.order() <= DEFAULT_CAP);
    }
}
