use std::sync::OnceLock;

use proptest::prelude::*;

use mckay_core::groups::fixtures::QuinticVariant;
use mckay_core::orbifold::{
    chain_check, euler_orbifold, lefschetz_theorem1, quintic_sheet, split_stratum, toric_mckay,
    GSpaceSheet,
};
use mckay_core::toric::{HGenerator, LatticePair, PermSymmetry};

fn swap_sheet() -> &'static GSpaceSheet {
    static SHEET: OnceLock<GSpaceSheet> = OnceLock::new();
    SHEET.get_or_init(|| quintic_sheet(QuinticVariant::Swap).unwrap())
}

fn three_dimensional_pair(s: &PermSymmetry, m: u64, v: [i64; 2]) -> LatticePair {
    let a = [v[0], v[1], (-(v[0] + v[1])).rem_euclid(m as i64)];
    let gens = (0..s.order())
        .map(|j| {
            let g = s.power(j);
            let mut img = vec![0; 3];
            for (i, x) in a.iter().enumerate() {
                img[g.images()[i]] = *x;
            }
            HGenerator::new(img, m)
        })
        .collect();
    LatticePair::new(3, gens).unwrap()
}

#[test]
fn sheet_consistency() {
    let sheet = swap_sheet();
    sheet.validate().unwrap();
    for c in &sheet.classes {
        assert_eq!(c.size * c.centralizer_order, sheet.group_order);
    }
    assert_eq!(sheet.classes.iter().map(|c| c.size).sum::<u64>(), 125);
    assert_eq!(euler_orbifold(sheet).unwrap(), 200);
}

#[test]
fn cyclic_surface_sweep_against_groups() {
    let s = PermSymmetry::parse_cycles(2, "(1 2)").unwrap();
    for m in 1..=30i64 {
        let gens = if m == 1 {
            vec![]
        } else {
            vec![HGenerator::new(vec![1, m - 1], m as u64)]
        };
        let lp = LatticePair::new(2, gens).unwrap();
        let r = toric_mckay(&lp, &s).unwrap();
        assert!(r.agree, "m={m}: {r:?}");
        assert_eq!(r.order, m as usize);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn splitting_a_stratum_keeps_the_chain(
        index in 0usize..8,
        parts in (-50i64..50, -50i64..50, -50i64..50),
    ) {
        let sheet = swap_sheet();
        let index = index % sheet.strata.len();
        let split = split_stratum(sheet, index, parts);
        let (a, b) = (chain_check(sheet), chain_check(&split));
        prop_assert_eq!(a.quotient_strata, b.quotient_strata);
        prop_assert_eq!(a.weighted_strata, b.weighted_strata);
        prop_assert_eq!(a.consistent, b.consistent);
        prop_assert_eq!(lefschetz_theorem1(&split).unwrap(), 56);
    }

    #[test]
    fn three_dimensional_mckay(
        cycle in prop::sample::select(vec!["(1 2)", "(2 3)", "(1 2 3)"]),
        m in 2u64..=7,
        v in [0i64..7, 0i64..7],
    ) {
        let s = PermSymmetry::parse_cycles(3, cycle).unwrap();
        let lp = three_dimensional_pair(&s, m, [v[0] % m as i64, v[1] % m as i64]);
        let r = toric_mckay(&lp, &s).unwrap();
        prop_assert!(r.agree, "{:?}", r);
    }
}
