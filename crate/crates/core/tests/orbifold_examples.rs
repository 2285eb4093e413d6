use std::collections::BTreeMap;

use num_traits::Zero;

use mckay_core::exactmath::rat::{int, rat};
use mckay_core::groups::fixtures::QuinticVariant;
use mckay_core::orbifold::{
    ade_cases, chain_check, commuting_pair_euler, contributions_by_dimension, dynkin_lefschetz,
    euler_orbifold, lefschetz_theorem1, lt_sheet, mckay_check, quintic_identity_sheet,
    quintic_sheet, DynkinGraph, GSpaceSheet, OrbifoldError, Provenance, QuinticGeometry,
    LT_IDENTITY, QUINTIC_IDENTITY,
};

#[test]
fn point_sheets() {
    let p = GSpaceSheet::point();
    assert_eq!(euler_orbifold(&p).unwrap(), 1);
    assert_eq!(lefschetz_theorem1(&p).unwrap(), 1);
    let g = GSpaceSheet::point_with_group("point/S3", 6, &[("e", 1), ("t", 3), ("c", 2)]);
    assert_eq!(euler_orbifold(&g).unwrap(), 3);
    assert!(chain_check(&g).consistent);
}

#[test]
fn quintic_swap_totals() {
    let sheet = quintic_sheet(QuinticVariant::Swap).unwrap();
    assert_eq!(sheet.group_order, 125);
    assert_eq!(sheet.in_ch_count(), 25);
    assert_eq!(lefschetz_theorem1(&sheet).unwrap(), 56);
    let id = sheet.class(QUINTIC_IDENTITY).unwrap();
    assert_eq!(id.lefschetz_quotient.unwrap().value, 8);
    let parts = contributions_by_dimension(&sheet, QUINTIC_IDENTITY).unwrap();
    assert_eq!(
        parts,
        BTreeMap::from([(Some(0), (12, 24)), (Some(1), (12, 24))])
    );
}

#[test]
fn quintic_two_pair_totals() {
    let sheet = quintic_sheet(QuinticVariant::SwapTwoPairs).unwrap();
    assert_eq!(sheet.in_ch_count(), 5);
    assert_eq!(lefschetz_theorem1(&sheet).unwrap(), 8);
    assert_eq!(
        sheet
            .class(QUINTIC_IDENTITY)
            .unwrap()
            .lefschetz_quotient
            .unwrap()
            .value,
        0
    );
}

#[test]
fn lt_totals() {
    let sheet = lt_sheet().unwrap();
    assert_eq!(sheet.group_order, 81);
    assert_eq!(sheet.in_ch_count(), 9);
    assert_eq!(lefschetz_theorem1(&sheet).unwrap(), 16);
    let parts = contributions_by_dimension(&sheet, LT_IDENTITY).unwrap();
    assert_eq!(parts, BTreeMap::from([(Some(0), (8, 16))]));
    // In C(h): equal exponents on x1, x2 and on x4, x5.
    for c in sheet.classes.iter().filter(|c| c.in_ch) {
        let e: Vec<i64> = c.label[1..c.label.len() - 1]
            .split(',')
            .map(|x| x.parse().unwrap())
            .collect();
        assert_eq!(e[0], e[1]);
        assert_eq!(e[3], e[4]);
    }
    assert!(matches!(
        euler_orbifold(&sheet),
        Err(OrbifoldError::MissingValue { .. })
    ));
}

#[test]
fn derived_values_match_quoted_constants() {
    for (variant, on_variety, identity) in [
        (QuinticVariant::Swap, 56, 8),
        (QuinticVariant::SwapTwoPairs, -8, 0),
    ] {
        let geo = QuinticGeometry::new(Some(variant)).unwrap();
        assert_eq!(geo.lefschetz_on_variety(), on_variety);
        let sheet = geo.sheet().unwrap();
        let in_ch = geo.in_ch();
        let id = geo.group().identity_index();
        for g in (0..125).filter(|&g| in_ch[g]) {
            let derived = geo.lefschetz_quotient(g);
            let expected = if g == id { identity } else { 2 };
            assert_eq!(derived, int(expected), "{:?}", geo.exponents(g));
        }
        for c in &sheet.classes {
            if let Some(l) = c.lefschetz_quotient {
                assert_eq!(l.provenance, Provenance::Paper);
            }
        }
    }
}

#[test]
fn fixed_surface_euler_number() {
    // V^h for the single swap: the point (1,-1,0,0,0) and a smooth quintic surface.
    assert_eq!(
        mckay_core::orbifold::fermat::euler_smooth_hypersurface(4, 5),
        (3 - (-10)) * 5 + (-10)
    );
}

#[test]
fn euler_number_double_count() {
    for sheet in [
        quintic_sheet(QuinticVariant::Swap).unwrap(),
        quintic_sheet(QuinticVariant::SwapTwoPairs).unwrap(),
        quintic_identity_sheet().unwrap(),
    ] {
        let e = euler_orbifold(&sheet).unwrap();
        assert_eq!(commuting_pair_euler(&sheet).unwrap(), int(e));
        assert_eq!(e, 200, "mirror quintic");
    }
}

#[test]
fn identity_reduces_to_euler_number() {
    let sheet = quintic_identity_sheet().unwrap();
    assert_eq!(sheet.in_ch_count(), 125);
    assert_eq!(
        lefschetz_theorem1(&sheet).unwrap(),
        euler_orbifold(&sheet).unwrap()
    );
    let chain = chain_check(&sheet);
    assert!(chain.consistent, "{chain:?}");
    assert!(chain.weighted_step_holds);
    assert_eq!(chain.weighted_strata, int(200));
}

#[test]
fn chain_on_quintic_sheets() {
    let swap = chain_check(&quintic_sheet(QuinticVariant::Swap).unwrap());
    assert!(swap.consistent, "{swap:?}");
    assert_eq!(swap.quotient_strata, Some(int(56)));
    assert_eq!(swap.class_sum, Some(int(56)));
    // The weighted form is not integral here: h does not commute with G.
    assert_eq!(swap.weighted_strata, rat(112, 5));
    assert!(!swap.weighted_step_holds);
    assert!(swap.mismatch.is_some());

    let two = chain_check(&quintic_sheet(QuinticVariant::SwapTwoPairs).unwrap());
    assert!(two.consistent, "{two:?}");
    assert_eq!(two.quotient_strata, Some(int(8)));
}

#[test]
fn non_invariant_strata_contribute_nothing() {
    let sheet = quintic_sheet(QuinticVariant::Swap).unwrap();
    let moved: Vec<_> = sheet.strata.iter().filter(|s| !s.h_invariant).collect();
    assert!(!moved.is_empty());
    for s in moved {
        assert!(s.lefschetz_stratum.value.is_zero());
        assert_eq!(s.con_h, 0);
    }
    let mut altered = sheet.clone();
    for s in altered.strata.iter_mut().filter(|s| !s.h_invariant) {
        s.lefschetz_stratum.value = 1000;
        s.con_h = 1;
    }
    let (a, b) = (chain_check(&sheet), chain_check(&altered));
    assert_eq!(a.quotient_strata, b.quotient_strata);
    assert_eq!(a.weighted_strata, b.weighted_strata);
}

#[test]
fn sheet_round_trip_and_schema_errors() {
    let sheet = quintic_sheet(QuinticVariant::SwapTwoPairs).unwrap();
    let back = GSpaceSheet::from_json(&sheet.to_json()).unwrap();
    assert_eq!(back, sheet);
    let err =
        GSpaceSheet::from_json("{\n  \"name\": \"x\",\n  \"group_order\": \"one\"\n}").unwrap_err();
    assert!(
        matches!(err, OrbifoldError::Schema { line: 3, .. }),
        "{err:?}"
    );
    let mut bad = GSpaceSheet::point();
    bad.classes[0].size = 2;
    assert!(matches!(
        GSpaceSheet::from_json(&bad.to_json()),
        Err(OrbifoldError::InconsistentSheet(_))
    ));
}

#[test]
fn inconsistent_double_count_is_an_error() {
    let mut sheet = quintic_sheet(QuinticVariant::Swap).unwrap();
    sheet.commuting_pairs.as_mut().unwrap()[0].euler.value += 125;
    assert!(matches!(
        euler_orbifold(&sheet),
        Err(OrbifoldError::InconsistentSheet(_))
    ));
}

#[test]
fn dynkin_values() {
    assert_eq!(dynkin_lefschetz(&DynkinGraph::a_chain(3, true)), 2);
    assert_eq!(dynkin_lefschetz(&DynkinGraph::d_graph(6, true)), 5);
    assert_eq!(dynkin_lefschetz(&DynkinGraph::e6(true)), 3);
    assert_eq!(dynkin_lefschetz(&DynkinGraph::d4_triality()), 2);
    assert_eq!(dynkin_lefschetz(&DynkinGraph::e6(false)), 7);
    assert!(DynkinGraph::new("bad", 3, vec![(0, 1)], vec![1, 2, 0]).is_err());
}

#[test]
fn mckay_surface_cases() {
    for (fixture, graph) in ade_cases() {
        let r = mckay_check(&fixture, &graph).unwrap();
        assert!(r.agree, "{r:?}");
    }
    let tet = ade_cases()
        .into_iter()
        .find(|(f, _)| f.name == "binary-tetrahedral")
        .unwrap();
    let r = mckay_check(&tet.0, &tet.1).unwrap();
    assert_eq!((r.classes, r.invariant_classes), (7, 3));
}
