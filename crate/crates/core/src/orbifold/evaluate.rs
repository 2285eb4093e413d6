//! Orbifold Euler number, the class-sum Lefschetz formula and the stratified chain.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::exactmath::rat::format_rat;
use crate::exactmath::Rat;

use super::sheet::{GSpaceSheet, StratumRecord};
use super::OrbifoldError;

fn ratio(n: i64, d: u64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn ser_rat<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(v))
}

fn ser_opt_rat<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&format_rat(v)),
        None => s.serialize_none(),
    }
}

/// Σ_[g] e(X^g/C(g)).
///
/// When the sheet carries commuting-pair data, (1/|G|) Σ_{gc=cg} e(X^g ∩ X^c)
/// is evaluated too and must agree.
pub fn euler_orbifold(sheet: &GSpaceSheet) -> Result<i64, OrbifoldError> {
    let mut total = 0i64;
    for c in &sheet.classes {
        let e = c
            .euler_quotient
            .ok_or_else(|| OrbifoldError::MissingValue {
                class: c.label.clone(),
                field: "euler_quotient",
            })?;
        total += e.value;
    }
    if let Some(pairs) = commuting_pair_euler(sheet) {
        if pairs != Rat::from_integer(total.into()) {
            return Err(OrbifoldError::InconsistentSheet(format!(
                "class sum {total} differs from the commuting-pair average {}",
                format_rat(&pairs)
            )));
        }
    }
    Ok(total)
}

/// (1/|G|) Σ_{gc=cg} e(X^g ∩ X^c), if the sheet has the table.
pub fn commuting_pair_euler(sheet: &GSpaceSheet) -> Option<Rat> {
    let pairs = sheet.commuting_pairs.as_ref()?;
    let sum: i64 = pairs
        .iter()
        .map(|p| p.multiplicity as i64 * p.euler.value)
        .sum();
    Some(ratio(sum, sheet.group_order))
}

/// Σ_{[g], g ∈ C(h)} L(h, X^g/C(g)).
pub fn lefschetz_theorem1(sheet: &GSpaceSheet) -> Result<i64, OrbifoldError> {
    Ok(contributions(sheet)?.iter().map(|c| c.value).sum())
}

/// One summand of the class-sum Lefschetz formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub label: String,
    pub fixed_dimension: Option<u32>,
    pub value: i64,
}

pub fn contributions(sheet: &GSpaceSheet) -> Result<Vec<Contribution>, OrbifoldError> {
    sheet
        .classes
        .iter()
        .filter(|c| c.in_ch)
        .map(|c| {
            let l = c
                .lefschetz_quotient
                .ok_or_else(|| OrbifoldError::MissingValue {
                    class: c.label.clone(),
                    field: "lefschetz_quotient",
                })?;
            Ok(Contribution {
                label: c.label.clone(),
                fixed_dimension: c.fixed_dimension,
                value: l.value,
            })
        })
        .collect()
}

/// Groups the contributions of non-identity classes by fixed-set dimension:
/// dimension ↦ (number of classes, total).
pub fn contributions_by_dimension(
    sheet: &GSpaceSheet,
    identity_label: &str,
) -> Result<BTreeMap<Option<u32>, (usize, i64)>, OrbifoldError> {
    let mut out: BTreeMap<Option<u32>, (usize, i64)> = BTreeMap::new();
    for c in contributions(sheet)? {
        if c.label == identity_label {
            continue;
        }
        let e = out.entry(c.fixed_dimension).or_default();
        e.0 += 1;
        e.1 += c.value;
    }
    Ok(out)
}

/// Stage values of the stratified computation of L(h, resolution).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// Σ over h-invariant [S] of L(h, X^{[S]}/G) · con(h, S).
    #[serde(serialize_with = "ser_opt_rat")]
    pub quotient_strata: Option<Rat>,
    /// Σ over h-invariant [S] of L(h, X^{[S]}) · |S|/|G| · con(h, S).
    #[serde(serialize_with = "ser_rat")]
    pub weighted_strata: Rat,
    /// Σ over classes in C(h) of L(h, X^g/C(g)).
    #[serde(serialize_with = "ser_opt_rat")]
    pub class_sum: Option<Rat>,
    /// The strata-level and class-level totals agree.
    pub consistent: bool,
    /// The weighted form equals the quotient form.
    pub weighted_step_holds: bool,
    pub mismatch: Option<String>,
}

fn invariant_strata(sheet: &GSpaceSheet) -> impl Iterator<Item = &StratumRecord> {
    sheet.strata.iter().filter(|s| s.h_invariant)
}

pub fn chain_check(sheet: &GSpaceSheet) -> ChainReport {
    let quotient_strata = invariant_strata(sheet)
        .map(|s| {
            s.lefschetz_quotient_stratum
                .map(|l| Rat::from_integer(BigInt::from(l.value * s.con_h as i64)))
        })
        .sum::<Option<Rat>>();
    let weighted_strata = invariant_strata(sheet)
        .map(|s| {
            ratio(
                s.lefschetz_stratum.value * s.stabilizer_order as i64 * s.con_h as i64,
                sheet.group_order,
            )
        })
        .fold(Rat::zero(), |a, b| a + b);
    let class_sum = lefschetz_theorem1(sheet)
        .ok()
        .map(|v| Rat::from_integer(v.into()));
    let strata_total = quotient_strata
        .clone()
        .unwrap_or_else(|| weighted_strata.clone());
    let weighted_step_holds = quotient_strata
        .as_ref()
        .is_none_or(|q| *q == weighted_strata);
    let consistent = class_sum.as_ref().is_some_and(|c| *c == strata_total);
    let mut problems = Vec::new();
    if let Some(c) = &class_sum {
        if *c != strata_total {
            problems.push(format!(
                "strata give {}, classes give {}",
                format_rat(&strata_total),
                format_rat(c)
            ));
        }
    } else {
        problems.push("class-level Lefschetz values are incomplete".to_string());
    }
    if !weighted_step_holds {
        problems.push(format!(
            "weighted strata give {}, quotient strata give {}",
            format_rat(&weighted_strata),
            format_rat(quotient_strata.as_ref().expect("compared above"))
        ));
    }
    ChainReport {
        quotient_strata,
        weighted_strata,
        class_sum,
        consistent,
        weighted_step_holds,
        mismatch: (!problems.is_empty()).then(|| problems.join("; ")),
    }
}

/// Splits stratum `index` into two records whose Euler and Lefschetz values add
/// up to the original (`part` goes to the first piece).
pub fn split_stratum(sheet: &GSpaceSheet, index: usize, part: (i64, i64, i64)) -> GSpaceSheet {
    let mut out = sheet.clone();
    let original = out.strata[index].clone();
    let mut a = original.clone();
    let mut b = original.clone();
    a.label = format!("{}/a", original.label);
    b.label = format!("{}/b", original.label);
    a.euler_stratum.value = part.0;
    b.euler_stratum.value = original.euler_stratum.value - part.0;
    a.lefschetz_stratum.value = part.1;
    b.lefschetz_stratum.value = original.lefschetz_stratum.value - part.1;
    if let Some(q) = original.lefschetz_quotient_stratum {
        a.lefschetz_quotient_stratum = Some(super::sheet::Tagged { value: part.2, ..q });
        b.lefschetz_quotient_stratum = Some(super::sheet::Tagged {
            value: q.value - part.2,
            ..q
        });
    }
    out.strata[index] = a;
    out.strata.insert(index + 1, b);
    out
}
