//! The pair of cubics in P^5 with its order-81 diagonal group and the
//! involution x1 ↔ x2, x4 ↔ x5. Class-level data only.

use crate::groups::fixtures::{lt_exponents, lt_group};
use crate::groups::{ch_filter_indices, GroupElement, DEFAULT_CAP};

use super::quintic::label;
use super::sheet::{ClassRecord, GSpaceSheet, Tagged};
use super::OrbifoldError;

/// L(h, X^g/G) for the non-identity classes in C(h).
pub const QUOTIENT_LEFSCHETZ: i64 = 2;
/// L(h, V/G), from the invariant forms on the complete intersection.
pub const IDENTITY_CONTRIBUTION: i64 = 0;
/// e(V^h) of the fixed curve (the line contributes separately).
pub const FIXED_CURVE_EULER: i64 = -18;

/// Label of the identity class.
pub const LT_IDENTITY: &str = "(0,0,0,0,0,0)";

pub fn lt_sheet() -> Result<GSpaceSheet, OrbifoldError> {
    let fixture = lt_group();
    let (g, action) = fixture.build(DEFAULT_CAP)?;
    let mut exponents = vec![Vec::new(); g.order()];
    for mu in 0..9i64 {
        for a1 in 0..3 {
            for a4 in 0..3 {
                let a2 = (mu - a1).rem_euclid(3);
                let a5 = (mu - a4).rem_euclid(3);
                let e = lt_exponents(a1, a2, a4, a5, mu);
                let i = g
                    .index_of(&GroupElement::diagonal_roots(9, &e))
                    .ok_or_else(|| {
                        OrbifoldError::InconsistentSheet("element outside the group".into())
                    })?;
                exponents[i] = e.iter().map(|x| x.rem_euclid(9)).collect();
            }
        }
    }
    if exponents.iter().any(|e| e.is_empty()) {
        return Err(OrbifoldError::InconsistentSheet(
            "group and exponent enumeration disagree".into(),
        ));
    }
    let ch = ch_filter_indices(&g, &action, &[]);
    let classes_of = &action.classes().class_of;
    let identity = g.identity_index();
    let order = g.order() as u64;
    let mut classes: Vec<ClassRecord> = (0..g.order())
        .map(|x| {
            let in_ch = ch.contains(&classes_of[x]);
            let (dim, lef) = match (in_ch, x == identity) {
                (true, true) => (Some(3), Some(Tagged::paper(IDENTITY_CONTRIBUTION))),
                (true, false) => (Some(0), Some(Tagged::paper(QUOTIENT_LEFSCHETZ))),
                _ => (None, None),
            };
            ClassRecord {
                label: label(&exponents[x]),
                size: 1,
                centralizer_order: order,
                in_ch,
                fixed_dimension: dim,
                euler_quotient: None,
                lefschetz_quotient: lef,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.label.cmp(&b.label));
    let sheet = GSpaceSheet {
        name: "lt-complete-intersection".into(),
        group_order: order,
        group: Some(fixture.name),
        classes,
        strata: Vec::new(),
        commuting_pairs: None,
        notes: vec![
            "labels are exponents of ζ_9 on x1..x6".into(),
            format!(
                "V^h is a line and a curve with e = {FIXED_CURVE_EULER}; L(h, V) and L(h, resolution) agree up to the sign of h"
            ),
        ],
    };
    sheet.validate()?;
    Ok(sheet)
}
