//! Serialized description of a G-space with an extra automorphism h.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::OrbifoldError;

/// Where a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted constant.
    Paper,
    /// Computed by this library.
    Derived,
    /// Holds for structural reasons (a point, the identity, ...).
    Trivial,
}

/// An exact integer together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tagged {
    pub value: i64,
    pub provenance: Provenance,
}

impl Tagged {
    pub fn new(value: i64, provenance: Provenance) -> Self {
        Self { value, provenance }
    }

    pub fn paper(value: i64) -> Self {
        Self::new(value, Provenance::Paper)
    }

    pub fn derived(value: i64) -> Self {
        Self::new(value, Provenance::Derived)
    }

    pub fn trivial(value: i64) -> Self {
        Self::new(value, Provenance::Trivial)
    }
}

/// One conjugacy class [g] with e(X^g/C(g)) and L(h, X^g/C(g)).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub label: String,
    pub size: u64,
    pub centralizer_order: u64,
    pub in_ch: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_dimension: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_quotient: Option<Tagged>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz_quotient: Option<Tagged>,
}

/// The stratum X^{[S]} of points whose stabilizer is conjugate to S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub label: String,
    pub stabilizer_order: u64,
    /// Number of conjugacy classes of S.
    pub class_count: u64,
    /// e(X^{[S]}).
    pub euler_stratum: Tagged,
    /// L(h, X^{[S]}); zero when [S] is not h-invariant.
    pub lefschetz_stratum: Tagged,
    /// L(h, X^{[S]}/G), when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz_quotient_stratum: Option<Tagged>,
    pub h_invariant: bool,
    /// con(h, S): h-invariant conjugacy classes of S.
    pub con_h: u64,
}

/// e(X^g ∩ X^c) for the `multiplicity` commuting element pairs (g, c) that
/// fall into the given pair of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutingPair {
    pub g: String,
    pub c: String,
    pub multiplicity: u64,
    pub euler: Tagged,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSpaceSheet {
    pub name: String,
    pub group_order: u64,
    /// Name of the group fixture this sheet was generated from, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub classes: Vec<ClassRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strata: Vec<StratumRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commuting_pairs: Option<Vec<CommutingPair>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GSpaceSheet {
    /// Trivial group acting on a point.
    pub fn point() -> Self {
        Self::point_with_group("point", 1, &[("id", 1)])
    }

    /// A point with a group acting trivially; `classes` lists (label, size).
    pub fn point_with_group(name: &str, order: u64, classes: &[(&str, u64)]) -> Self {
        Self {
            name: name.into(),
            group_order: order,
            group: None,
            classes: classes
                .iter()
                .map(|&(label, size)| ClassRecord {
                    label: label.into(),
                    size,
                    centralizer_order: order / size,
                    in_ch: true,
                    fixed_dimension: Some(0),
                    euler_quotient: Some(Tagged::trivial(1)),
                    lefschetz_quotient: Some(Tagged::trivial(1)),
                })
                .collect(),
            strata: vec![StratumRecord {
                label: "G".into(),
                stabilizer_order: order,
                class_count: classes.len() as u64,
                euler_stratum: Tagged::trivial(1),
                lefschetz_stratum: Tagged::trivial(1),
                lefschetz_quotient_stratum: Some(Tagged::trivial(1)),
                h_invariant: true,
                con_h: classes.len() as u64,
            }],
            commuting_pairs: None,
            notes: Vec::new(),
        }
    }

    /// Structural consistency: class sizes, centralizer orders, labels, con(h, S).
    pub fn validate(&self) -> Result<(), OrbifoldError> {
        let bad = |msg: String| Err(OrbifoldError::InconsistentSheet(msg));
        if self.group_order == 0 {
            return bad("group_order must be positive".into());
        }
        let mut labels = BTreeSet::new();
        let mut total = 0u64;
        for c in &self.classes {
            if !labels.insert(c.label.as_str()) {
                return bad(format!("duplicate class label `{}`", c.label));
            }
            if c.size * c.centralizer_order != self.group_order {
                return bad(format!(
                    "class `{}`: size {} × centralizer order {} ≠ {}",
                    c.label, c.size, c.centralizer_order, self.group_order
                ));
            }
            total += c.size;
        }
        if total != self.group_order {
            return bad(format!(
                "class sizes sum to {total}, group order is {}",
                self.group_order
            ));
        }
        for s in &self.strata {
            if s.con_h > s.class_count {
                return bad(format!(
                    "stratum `{}`: con_h {} exceeds the class count {}",
                    s.label, s.con_h, s.class_count
                ));
            }
            if s.stabilizer_order == 0 || !self.group_order.is_multiple_of(s.stabilizer_order) {
                return bad(format!(
                    "stratum `{}`: stabilizer order {} does not divide {}",
                    s.label, s.stabilizer_order, self.group_order
                ));
            }
        }
        if let Some(pairs) = &self.commuting_pairs {
            for p in pairs {
                for l in [&p.g, &p.c] {
                    if !labels.contains(l.as_str()) {
                        return bad(format!("commuting pair refers to unknown class `{l}`"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses and validates a JSON sheet.
    pub fn from_json(text: &str) -> Result<Self, OrbifoldError> {
        let sheet: Self = serde_json::from_str(text).map_err(|e| OrbifoldError::Schema {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        sheet.validate()?;
        Ok(sheet)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sheets serialize")
    }

    pub fn class(&self, label: &str) -> Option<&ClassRecord> {
        self.classes.iter().find(|c| c.label == label)
    }

    pub fn in_ch_count(&self) -> usize {
        self.classes.iter().filter(|c| c.in_ch).count()
    }
}
