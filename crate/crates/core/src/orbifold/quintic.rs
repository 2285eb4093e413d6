//! The quintic Fermat pencil with G = Z_5^3 (diagonal symmetries modulo scalars)
//! and a coordinate involution h.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::Rat;
use crate::groups::fixtures::{quintic, QuinticVariant};
use crate::groups::{ch_filter_indices, FiniteMatrixGroup, GroupElement, OuterAction, DEFAULT_CAP};

use super::fermat::{FermatPencil, Support};
use super::sheet::{ClassRecord, CommutingPair, GSpaceSheet, StratumRecord, Tagged};
use super::OrbifoldError;

/// L(h, X^g/C(g)) for non-identity classes in C(h).
pub const QUOTIENT_LEFSCHETZ: i64 = 2;

/// L(h, V/G) from the action of h on the invariant 3-forms.
pub fn identity_contribution(variant: QuinticVariant) -> i64 {
    match variant {
        QuinticVariant::Swap => 8,
        QuinticVariant::SwapTwoPairs => 0,
    }
}

fn transpositions(perm: &[usize]) -> Vec<(usize, usize)> {
    (0..perm.len())
        .filter(|&i| perm[i] > i)
        .map(|i| (i, perm[i]))
        .collect()
}

pub fn label(alpha: &[i64]) -> String {
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A stratum X^{[S]}: all supports sharing one stabilizer.
#[derive(Debug, Clone)]
struct Stratum {
    stabilizer: Vec<usize>,
    supports: Vec<Support>,
}

/// Group, involution and stratification of the quintic, with derived Euler and
/// Lefschetz numbers of fixed loci and their quotients.
#[derive(Debug, Clone)]
pub struct QuinticGeometry {
    variant: Option<QuinticVariant>,
    pencil: FermatPencil,
    pairs: Vec<(usize, usize)>,
    group: FiniteMatrixGroup,
    action: OuterAction,
    exponents: Vec<Vec<i64>>,
    strata: Vec<Stratum>,
}

impl QuinticGeometry {
    /// `None` takes h = identity.
    pub fn new(variant: Option<QuinticVariant>) -> Result<Self, OrbifoldError> {
        let mut fixture = quintic(variant.unwrap_or(QuinticVariant::Swap));
        if variant.is_none() {
            fixture.h = GroupElement::identity(5);
        }
        let (group, action) = fixture.build(DEFAULT_CAP)?;
        let pencil = FermatPencil::quintic();
        let mut exponents = vec![Vec::new(); group.order()];
        for alpha in pencil.symmetries() {
            let i = group
                .index_of(&GroupElement::diagonal_roots(5, &alpha))
                .ok_or_else(|| {
                    OrbifoldError::InconsistentSheet("symmetry outside the group".into())
                })?;
            exponents[i] = alpha;
        }
        if exponents.iter().any(|e| e.is_empty()) {
            return Err(OrbifoldError::InconsistentSheet(
                "group and exponent enumeration disagree".into(),
            ));
        }
        let mut by_stabilizer: BTreeMap<Vec<usize>, Vec<Support>> = BTreeMap::new();
        for s in pencil.supports() {
            let stab: Vec<usize> = (0..group.order())
                .filter(|&i| FermatPencil::fixes_support(&exponents[i], s))
                .collect();
            by_stabilizer.entry(stab).or_default().push(s);
        }
        let mut strata: Vec<Stratum> = by_stabilizer
            .into_iter()
            .map(|(stabilizer, supports)| Stratum {
                stabilizer,
                supports,
            })
            .collect();
        strata.sort_by_key(|s| std::cmp::Reverse(s.stabilizer.len()));
        let pairs = variant
            .map(|v| transpositions(&v.permutation()))
            .unwrap_or_default();
        Ok(Self {
            variant,
            pencil,
            pairs,
            group,
            action,
            exponents,
            strata,
        })
    }

    pub fn group(&self) -> &FiniteMatrixGroup {
        &self.group
    }

    pub fn action(&self) -> &OuterAction {
        &self.action
    }

    pub fn exponents(&self, g: usize) -> &[i64] {
        &self.exponents[g]
    }

    fn order(&self) -> i64 {
        self.group.order() as i64
    }

    fn supports_fixed_by(&self, g: usize) -> impl Iterator<Item = Support> + '_ {
        let alpha = &self.exponents[g];
        self.pencil
            .supports()
            .into_iter()
            .filter(move |&s| FermatPencil::fixes_support(alpha, s))
    }

    /// dim X^g, or `None` if X^g is empty.
    pub fn fixed_dimension(&self, g: usize) -> Option<u32> {
        self.supports_fixed_by(g)
            .filter(|&s| self.pencil.euler_stratum(s) != 0)
            .map(|s| s.count_ones() - 2)
            .max()
    }

    /// e(X^g/G) = Σ_{J fixed by g} e(V_J) · |S_J| / |G|: G/S_J acts freely on V_J.
    pub fn euler_quotient(&self, g: usize) -> Rat {
        self.supports_fixed_by(g)
            .map(|s| {
                let stab = (0..self.group.order())
                    .filter(|&i| FermatPencil::fixes_support(&self.exponents[i], s))
                    .count() as i64;
                Rat::new(
                    BigInt::from(self.pencil.euler_stratum(s) * stab),
                    BigInt::from(self.order()),
                )
            })
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// e(X^g ∩ X^c).
    pub fn euler_intersection(&self, g: usize, c: usize) -> i64 {
        self.supports_fixed_by(g)
            .filter(|&s| FermatPencil::fixes_support(&self.exponents[c], s))
            .map(|s| self.pencil.euler_stratum(s))
            .sum()
    }

    fn twisted(&self, c: usize, supports: impl Iterator<Item = Support>) -> i64 {
        supports
            .map(|s| {
                self.pencil
                    .euler_twisted(&self.exponents[c], s, &self.pairs)
            })
            .sum()
    }

    /// L(h, X^g/G) = (1/|G|) Σ_c e(X^g ∩ Fix(c·h)).
    pub fn lefschetz_quotient(&self, g: usize) -> Rat {
        let sum: i64 = (0..self.group.order())
            .map(|c| self.twisted(c, self.supports_fixed_by(g)))
            .sum();
        Rat::new(BigInt::from(sum), BigInt::from(self.order()))
    }

    /// L(h, V) = e(V^h).
    pub fn lefschetz_on_variety(&self) -> i64 {
        self.twisted(
            self.group.identity_index(),
            self.pencil.supports().into_iter(),
        )
    }

    /// Classes in C(h), using the stabilizers of all strata.
    pub fn in_ch(&self) -> Vec<bool> {
        let stabilizers: Vec<Vec<usize>> =
            self.strata.iter().map(|s| s.stabilizer.clone()).collect();
        let ch = ch_filter_indices(&self.group, &self.action, &stabilizers);
        let classes = self.action.classes();
        (0..self.group.order())
            .map(|g| ch.contains(&classes.class_of[g]))
            .collect()
    }

    fn stratum_label(&self, s: &Stratum) -> String {
        let parts: Vec<String> = s
            .supports
            .iter()
            .map(|m| {
                (0..5)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| i.to_string())
                    .collect()
            })
            .collect();
        format!("support {}", parts.join("|"))
    }

    fn integral(value: Rat, what: &str) -> Result<i64, OrbifoldError> {
        if !value.denom().eq(&BigInt::from(1)) {
            return Err(OrbifoldError::InconsistentSheet(format!(
                "{what} is not an integer: {value}"
            )));
        }
        Ok(i64::try_from(value.numer().clone()).expect("small"))
    }

    pub fn sheet(&self) -> Result<GSpaceSheet, OrbifoldError> {
        let order = self.group.order() as u64;
        let identity = self.group.identity_index();
        let in_ch = self.in_ch();
        let mut classes = Vec::with_capacity(self.group.order());
        for g in 0..self.group.order() {
            let euler = Self::integral(self.euler_quotient(g), "e(X^g/G)")?;
            let lefschetz = if !in_ch[g] {
                None
            } else if let Some(v) = self.variant {
                Some(if g == identity {
                    Tagged::paper(identity_contribution(v))
                } else {
                    Tagged::paper(QUOTIENT_LEFSCHETZ)
                })
            } else {
                Some(Tagged::derived(euler))
            };
            classes.push(ClassRecord {
                label: label(&self.exponents[g]),
                size: 1,
                centralizer_order: order,
                in_ch: in_ch[g],
                fixed_dimension: self.fixed_dimension(g),
                euler_quotient: Some(Tagged::derived(euler)),
                lefschetz_quotient: lefschetz,
            });
        }
        classes.sort_by(|a, b| a.label.cmp(&b.label));

        let mut strata = Vec::new();
        for s in &self.strata {
            let h_invariant = self.action.is_invariant(&s.stabilizer);
            let euler: i64 = s
                .supports
                .iter()
                .map(|&m| self.pencil.euler_stratum(m))
                .sum();
            let (lef, lef_quotient, con) = if h_invariant {
                let lef = self.twisted(identity, s.supports.iter().copied());
                let sum: i64 = (0..self.group.order())
                    .map(|c| self.twisted(c, s.supports.iter().copied()))
                    .sum();
                let q = Self::integral(
                    Rat::new(BigInt::from(sum), BigInt::from(self.order())),
                    "L(h, X^[S]/G)",
                )?;
                let con = self
                    .action
                    .invariant_class_count_in(&self.group, &s.stabilizer);
                (lef, q, con as u64)
            } else {
                (0, 0, 0)
            };
            strata.push(StratumRecord {
                label: self.stratum_label(s),
                stabilizer_order: s.stabilizer.len() as u64,
                class_count: s.stabilizer.len() as u64,
                euler_stratum: Tagged::derived(euler),
                lefschetz_stratum: Tagged::derived(lef),
                lefschetz_quotient_stratum: Some(Tagged::derived(lef_quotient)),
                h_invariant,
                con_h: con,
            });
        }

        let mut pairs = Vec::with_capacity(self.group.order().pow(2));
        for g in 0..self.group.order() {
            for c in 0..self.group.order() {
                pairs.push(CommutingPair {
                    g: label(&self.exponents[g]),
                    c: label(&self.exponents[c]),
                    multiplicity: 1,
                    euler: Tagged::derived(self.euler_intersection(g, c)),
                });
            }
        }

        let name = match self.variant {
            None => "quintic-identity",
            Some(QuinticVariant::Swap) => "quintic-swap",
            Some(QuinticVariant::SwapTwoPairs) => "quintic-swap-two-pairs",
        };
        let mut notes = vec![
            "Fermat quintic pencil with generic parameter; G = diagonal symmetries modulo scalars"
                .to_string(),
            "strata are grouped by stabilizer; the support lists the nonzero coordinates"
                .to_string(),
        ];
        if let Some(v) = self.variant {
            notes.push(format!(
                "e(V^h) = {}; L(h, V) and L(h, resolution) agree up to the sign of h",
                self.lefschetz_on_variety()
            ));
            notes.push(format!(
                "identity contribution {} comes from the action of h on the invariant 3-forms",
                identity_contribution(v)
            ));
        }
        let sheet = GSpaceSheet {
            name: name.into(),
            group_order: order,
            group: Some(name.into()),
            classes,
            strata,
            commuting_pairs: Some(pairs),
            notes,
        };
        sheet.validate()?;
        Ok(sheet)
    }
}

/// Label of the identity class on the quintic sheets.
pub const QUINTIC_IDENTITY: &str = "(0,0,0,0,0)";

pub fn quintic_sheet(variant: QuinticVariant) -> Result<GSpaceSheet, OrbifoldError> {
    QuinticGeometry::new(Some(variant))?.sheet()
}

/// The same space with h = identity; every value is derived.
pub fn quintic_identity_sheet() -> Result<GSpaceSheet, OrbifoldError> {
    QuinticGeometry::new(None)?.sheet()
}
