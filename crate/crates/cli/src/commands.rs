//! The `group`, `toric` and `orbifold` subcommands.

use std::fs;
use std::path::Path;

use mckay_core::exactmath::format_rat;
use mckay_core::groups::fixtures::{
    binary_dihedral, binary_tetrahedral, cyclic, d4_triality, lt_group, quintic, CyclicAction,
    GroupFixture, QuinticVariant,
};
use mckay_core::groups::{FiniteMatrixGroup, GroupElement, OuterAction};
use mckay_core::orbifold::{
    chain_check, commuting_pair_euler, contributions_by_dimension, euler_orbifold,
    lefschetz_theorem1, lt_sheet, quintic_identity_sheet, quintic_sheet, GSpaceSheet,
    OrbifoldError, Provenance, LT_IDENTITY, QUINTIC_IDENTITY,
};
use mckay_core::toric::theorem2::theorem2_check_on;
use mckay_core::toric::{
    adjusted_triangulation_with, equivariant_flips, verify_crepant, ConstructionOptions,
    InsertionOrder, LatticePair, Triangulation,
};
use serde_json::{json, Value};

use crate::args::{
    ActionName, GroupArgs, GroupFixtureName, OrbifoldArgs, OrderName, SheetFixtureName, ToricArgs,
    ToricFixtureName,
};
use crate::error::CliError;
use crate::parse::{parse_generators, parse_h_generators, parse_matrix, parse_permutation};
use crate::report::{computed, tagged, Check, RunReport, Status};

fn read_input(path: &Path) -> Result<(String, Vec<u8>), CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok((path.display().to_string(), bytes))
}

fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn utf8(input: &(String, Vec<u8>)) -> Result<&str, CliError> {
    std::str::from_utf8(&input.1)
        .map_err(|e| CliError::Usage(format!("{}: not UTF-8: {e}", input.0)))
}

/// Exact integers printed as JSON numbers when they fit in an i64.
pub fn integer(text: &str) -> Value {
    text.parse::<i64>()
        .map_or_else(|_| json!(text), |v| json!(v))
}

fn require_n(n: Option<u64>, what: &str) -> Result<u64, CliError> {
    n.ok_or_else(|| CliError::Usage(format!("--n is required for {what}")))
}

/// Number of a mod n with 2a = 0: the elements of Z_n fixed by a ↦ -a.
pub fn involution_fixed_count(n: u64) -> usize {
    (0..n).filter(|a| (2 * a) % n == 0).count()
}

/// The count stated in the literature for the coordinate swap: 1 for even n,
/// 2 for odd n. Kept for comparison only.
pub fn published_swap_count(n: u64) -> usize {
    if n.is_multiple_of(2) {
        1
    } else {
        2
    }
}

/// Engine count against the published one for the swap action on Z_n.
pub fn swap_parity_check(n: u64, engine: usize) -> Check {
    let published = published_swap_count(n);
    let status = if engine == published {
        Status::Pass
    } else {
        Status::OpenQuestion
    };
    Check::with_status(
        format!("swap-parity-n{n}"),
        status,
        json!({ "engine": engine, "published": published, "provenance": "paper" }),
    )
}

fn group_fixture(args: &GroupArgs) -> Result<GroupFixture, CliError> {
    if let Some(gens) = &args.gens {
        let generators = parse_generators(gens)?;
        let dim = generators
            .first()
            .map(|g| g.dim())
            .ok_or_else(|| CliError::Usage("--gens lists no matrices".into()))?;
        let h = match &args.h {
            Some(text) => parse_matrix(text)?,
            None => GroupElement::identity(dim),
        };
        return Ok(GroupFixture {
            name: "custom".into(),
            generators,
            projective: args.projective,
            h,
        });
    }
    let mut fixture = match args.fixture {
        Some(GroupFixtureName::Cyclic) => {
            let action = match args.action {
                ActionName::Rotation => CyclicAction::Rotation,
                ActionName::Swap => CyclicAction::Swap,
            };
            cyclic(require_n(args.n, "the cyclic fixture")?, action)
        }
        Some(GroupFixtureName::BinaryDihedral) => {
            let r = require_n(args.n, "the binary dihedral fixture")?;
            if r < 3 {
                return Err(CliError::Usage("binary dihedral D_r needs r >= 3".into()));
            }
            binary_dihedral(r)
        }
        Some(GroupFixtureName::D4Triality) => d4_triality(),
        Some(GroupFixtureName::BinaryTetrahedral) => binary_tetrahedral(),
        Some(GroupFixtureName::QuinticSwap) => quintic(QuinticVariant::Swap),
        Some(GroupFixtureName::QuinticSwapTwoPairs) => quintic(QuinticVariant::SwapTwoPairs),
        Some(GroupFixtureName::LtCompleteIntersection) => lt_group(),
        None => return Err(CliError::Usage("give --fixture or --gens".into())),
    };
    if let Some(text) = &args.h {
        fixture.h = parse_matrix(text)?;
    }
    Ok(fixture)
}

/// Σ class sizes = |G| and |class| · |C(g)| = |G|.
pub fn class_equation_check(name: &str, g: &FiniteMatrixGroup) -> Check {
    let classes = g.conjugacy_classes();
    let total: usize = classes.classes.iter().map(Vec::len).sum();
    let bad: Vec<usize> = classes
        .classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() * g.centralizer_indices(c[0]).len() != g.order())
        .map(|(i, _)| i)
        .collect();
    Check::new(
        format!("class-equation/{name}"),
        total == g.order() && bad.is_empty(),
        json!({ "order": g.order(), "class_size_sum": total, "bad_classes": bad }),
    )
}

fn group_expectations(args: &GroupArgs, action: &OuterAction, g: &FiniteMatrixGroup) -> Vec<Check> {
    let invariant = action.invariant_class_count();
    let classes = action.classes().len();
    let mut out = Vec::new();
    if args.gens.is_some() || args.h.is_some() {
        return out;
    }
    match args.fixture {
        Some(GroupFixtureName::Cyclic) => {
            let n = args.n.unwrap_or(1);
            out.push(Check::expect(
                "invariant-classes",
                invariant,
                involution_fixed_count(n),
                Provenance::Derived,
            ));
            if args.action == ActionName::Rotation && n.is_multiple_of(2) {
                out.push(Check::expect(
                    "invariant-classes-published",
                    invariant,
                    2,
                    Provenance::Paper,
                ));
            }
            if args.action == ActionName::Swap {
                out.push(swap_parity_check(n, invariant));
            }
        }
        Some(GroupFixtureName::BinaryDihedral) => {
            let r = args.n.unwrap_or(3) as usize;
            out.push(Check::expect(
                "invariant-classes",
                invariant,
                r - 1,
                Provenance::Paper,
            ));
        }
        Some(GroupFixtureName::D4Triality) => {
            out.push(Check::expect(
                "invariant-classes",
                invariant,
                2,
                Provenance::Paper,
            ));
        }
        Some(GroupFixtureName::BinaryTetrahedral) => {
            out.push(Check::expect("classes", classes, 7, Provenance::Paper));
            out.push(Check::expect(
                "invariant-classes",
                invariant,
                3,
                Provenance::Paper,
            ));
        }
        Some(GroupFixtureName::QuinticSwap | GroupFixtureName::QuinticSwapTwoPairs) => {
            out.push(Check::expect("order", g.order(), 125, Provenance::Paper));
        }
        Some(GroupFixtureName::LtCompleteIntersection) => {
            out.push(Check::expect("order", g.order(), 81, Provenance::Paper));
        }
        None => {}
    }
    out
}

pub fn run_group(args: &GroupArgs, command: Vec<String>) -> Result<RunReport, CliError> {
    let fixture = group_fixture(args)?;
    let mut report = RunReport::new(command, &[]);
    let (g, action) = fixture.build(args.cap)?;
    let mut sizes: Vec<usize> = action.classes().classes.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    report.result("name", json!(fixture.name));
    report.result("order", computed(g.order()));
    report.result("dimension", computed(g.dim()));
    report.result("abelian", computed(g.is_abelian()));
    report.result("projective", json!(g.is_projective()));
    report.result("classes", computed(action.classes().len()));
    report.result("class_sizes", computed(sizes));
    report.result("invariant", computed(action.invariant_class_count()));
    report.result("fixed_elements", computed(action.fixed_element_count()));
    report.check(class_equation_check(&fixture.name, &g));
    for c in group_expectations(args, &action, &g) {
        report.check(c);
    }
    Ok(report)
}

const Z5SQ_GENERATORS: &str = "1,4,0@5;0,1,4@5";

pub fn run_toric(args: &ToricArgs, command: Vec<String>) -> Result<RunReport, CliError> {
    let mut inputs = Vec::new();
    let (lp, loaded) = if let Some(path) = &args.triangulation {
        let input = read_input(path)?;
        let t = Triangulation::from_json(utf8(&input)?)?;
        inputs.push(input);
        (LatticePair::new(t.n(), t.generators().to_vec())?, Some(t))
    } else if args.fixture == Some(ToricFixtureName::Z5sqCycle) {
        (
            LatticePair::new(3, parse_h_generators(Z5SQ_GENERATORS)?)?,
            None,
        )
    } else {
        let n = args
            .n
            .ok_or_else(|| CliError::Usage("give --fixture, --n or --triangulation".into()))?;
        let gens = parse_h_generators(args.gen.as_deref().unwrap_or(""))?;
        (LatticePair::new(n, gens)?, None)
    };
    let perm_text = match (&args.perm, args.fixture) {
        (Some(p), _) => p.clone(),
        (None, Some(ToricFixtureName::Z5sqCycle)) => "(1 2 3)".into(),
        (None, None) => String::new(),
    };
    let s = parse_permutation(lp.n(), &perm_text)?;
    let mut report = RunReport::new(command, &inputs);

    let mut t = match loaded {
        Some(t) => t,
        None => {
            let order = match args.order {
                OrderName::Lex => InsertionOrder::Lexicographic,
                OrderName::Revlex => InsertionOrder::ReverseLexicographic,
            };
            let options = ConstructionOptions {
                order,
                layout: args.layout,
            };
            adjusted_triangulation_with(&lp, &s, options)?
        }
    };
    if let Some(k) = args.flip {
        let flips = equivariant_flips(&t, &lp, &s);
        let count = flips.len();
        t = flips
            .into_iter()
            .nth(k)
            .ok_or_else(|| CliError::Usage(format!("flip {k} requested, {count} available")))?;
    }

    let crepant = verify_crepant(&t, &lp);
    let invariant = t.is_invariant(&s);
    let invariant_simplices = t
        .vertex_permutation(&s)
        .map(|perm| {
            t.simplices()
                .iter()
                .filter(|x| Triangulation::map_simplex(&perm, x) == **x)
                .count()
        })
        .unwrap_or(0);
    let theorem = theorem2_check_on(&t, &lp, &s)?;
    let factors: Vec<String> = lp
        .invariant_factors()
        .iter()
        .map(|f| f.to_string())
        .collect();

    report.result("n", json!(lp.n()));
    report.result("permutation", json!(s.to_cycle_string()));
    report.result("group_order", computed(lp.order()));
    report.result("invariant_factors", computed(factors));
    report.result("simplices", computed(t.len()));
    report.result("invariant_simplices", computed(invariant_simplices));
    report.result("crepant", computed(crepant.ok));
    report.result("lefschetz", computed(integer(&theorem.lefschetz)));
    report.result("fixed_elements", computed(theorem.fixed_elements));
    report.result(
        "theorem",
        serde_json::to_value(&theorem).expect("serializable"),
    );

    report.check(Check::new(
        "crepant",
        crepant.ok,
        serde_json::to_value(&crepant).expect("serializable"),
    ));
    report.check(Check::new("invariant", invariant, Value::Null));
    report.check(Check::new("adjusted", theorem.adjusted, Value::Null));
    report.check(Check::expect(
        "lefschetz-equals-fixed-elements",
        theorem.lefschetz.clone(),
        theorem.fixed_elements.to_string(),
        Provenance::Derived,
    ));
    report.check(Check::new(
        "fixed-index-equals-enumeration",
        theorem.index_matches_enumeration,
        json!({ "index": theorem.fixed_lattice_index, "enumerated": theorem.fixed_elements }),
    ));
    report.check(Check::new(
        "volume-claims",
        theorem.claim1_holds && theorem.claim2_holds,
        json!({ "volume": theorem.volume, "claim1_rhs": theorem.claim1_rhs, "claim2_rhs": theorem.claim2_rhs }),
    ));
    if args.fixture == Some(ToricFixtureName::Z5sqCycle) {
        report.check(Check::expect(
            "fixture-lefschetz",
            theorem.lefschetz.as_str(),
            "1",
            Provenance::Paper,
        ));
        report.check(Check::expect(
            "fixture-simplices",
            t.len(),
            25,
            Provenance::Derived,
        ));
        report.check(Check::expect(
            "fixture-invariant-simplices",
            invariant_simplices,
            1,
            Provenance::Paper,
        ));
    }
    if let Some(path) = &args.out {
        write_output(path, &t.to_json())?;
    }
    Ok(report)
}

fn sheet_fixture(name: SheetFixtureName) -> Result<(GSpaceSheet, &'static str), OrbifoldError> {
    Ok(match name {
        SheetFixtureName::QuinticSwap => (quintic_sheet(QuinticVariant::Swap)?, QUINTIC_IDENTITY),
        SheetFixtureName::QuinticSwapTwoPairs => (
            quintic_sheet(QuinticVariant::SwapTwoPairs)?,
            QUINTIC_IDENTITY,
        ),
        SheetFixtureName::QuinticIdentity => (quintic_identity_sheet()?, QUINTIC_IDENTITY),
        SheetFixtureName::LtCompleteIntersection => (lt_sheet()?, LT_IDENTITY),
        SheetFixtureName::Point => (GSpaceSheet::point(), "id"),
    })
}

fn fixture_expectations(
    name: SheetFixtureName,
    sheet: &GSpaceSheet,
    e: Option<i64>,
    l: Option<i64>,
) -> Vec<Check> {
    let id = match name {
        SheetFixtureName::LtCompleteIntersection => LT_IDENTITY,
        SheetFixtureName::Point => "id",
        _ => QUINTIC_IDENTITY,
    };
    let non_identity = sheet
        .classes
        .iter()
        .filter(|c| c.in_ch && c.label != id)
        .count();
    let mut out = Vec::new();
    match name {
        SheetFixtureName::QuinticSwap => {
            out.push(Check::expect("lefschetz", l, Some(56), Provenance::Paper));
            let dims = contributions_by_dimension(sheet, id).unwrap_or_default();
            let by_dim = |d| dims.get(&Some(d)).copied().unwrap_or((0, 0));
            out.push(Check::expect(
                "one-dimensional-classes",
                by_dim(1),
                (12, 24),
                Provenance::Paper,
            ));
            out.push(Check::expect(
                "zero-dimensional-classes",
                by_dim(0),
                (12, 24),
                Provenance::Paper,
            ));
        }
        SheetFixtureName::QuinticSwapTwoPairs => {
            out.push(Check::expect("lefschetz", l, Some(8), Provenance::Paper));
            out.push(Check::expect(
                "non-identity-classes",
                non_identity,
                4,
                Provenance::Paper,
            ));
        }
        SheetFixtureName::QuinticIdentity => {
            out.push(Check::expect(
                "lefschetz-equals-euler",
                l,
                e,
                Provenance::Trivial,
            ));
        }
        SheetFixtureName::LtCompleteIntersection => {
            out.push(Check::expect("lefschetz", l, Some(16), Provenance::Paper));
            out.push(Check::expect(
                "in-ch-classes",
                sheet.in_ch_count(),
                9,
                Provenance::Paper,
            ));
            out.push(Check::expect(
                "order",
                sheet.group_order,
                81,
                Provenance::Paper,
            ));
        }
        SheetFixtureName::Point => {
            out.push(Check::expect("euler", e, Some(1), Provenance::Trivial));
            out.push(Check::expect("lefschetz", l, Some(1), Provenance::Trivial));
        }
    }
    out
}

pub fn run_orbifold(args: &OrbifoldArgs, command: Vec<String>) -> Result<RunReport, CliError> {
    let mut inputs = Vec::new();
    let (sheet, identity) = match (&args.sheet, args.fixture) {
        (Some(path), _) => {
            let input = read_input(path)?;
            let sheet = GSpaceSheet::from_json(utf8(&input)?)?;
            inputs.push(input);
            (sheet, None)
        }
        (None, Some(name)) => {
            let (sheet, id) = sheet_fixture(name)?;
            (sheet, Some(id))
        }
        (None, None) => return Err(CliError::Usage("give --fixture or --sheet".into())),
    };
    let mut report = RunReport::new(command, &inputs);
    report.result("name", json!(sheet.name));
    report.result("group_order", json!(sheet.group_order));
    report.result("classes", json!(sheet.classes.len()));
    report.result("in_ch_classes", computed(sheet.in_ch_count()));

    let euler = match euler_orbifold(&sheet) {
        Ok(e) => Some(e),
        Err(OrbifoldError::MissingValue { class, field }) => {
            report.result(
                "euler_orbifold",
                json!({ "value": null, "missing": format!("{field} of {class}") }),
            );
            None
        }
        Err(err @ OrbifoldError::InconsistentSheet(_)) => {
            report.check(Check::new(
                "euler-double-count",
                false,
                json!(err.to_string()),
            ));
            None
        }
        Err(err) => return Err(err.into()),
    };
    if let Some(e) = euler {
        report.result("euler_orbifold", computed(e));
        if let Some(pairs) = commuting_pair_euler(&sheet) {
            report.result("euler_commuting_pairs", computed(format_rat(&pairs)));
            report.check(Check::new("euler-double-count", true, Value::Null));
        }
    }
    let lefschetz = match lefschetz_theorem1(&sheet) {
        Ok(l) => {
            report.result("lefschetz", computed(l));
            Some(l)
        }
        Err(OrbifoldError::MissingValue { class, field }) => {
            report.result(
                "lefschetz",
                json!({ "value": null, "missing": format!("{field} of {class}") }),
            );
            None
        }
        Err(err) => return Err(err.into()),
    };
    if let Ok(dims) = contributions_by_dimension(&sheet, identity.unwrap_or("")) {
        let table: serde_json::Map<String, Value> = dims
            .iter()
            .map(|(d, (count, total))| {
                let key = d.map_or("empty".to_string(), |d| d.to_string());
                (key, json!({ "classes": count, "total": total }))
            })
            .collect();
        report.result("contributions_by_fixed_dimension", Value::Object(table));
    }
    if let Some(id) = identity.and_then(|id| sheet.class(id)) {
        if let Some(l) = id.lefschetz_quotient {
            report.result("identity_contribution", tagged(l));
        }
    }
    if !sheet.strata.is_empty() {
        let chain = chain_check(&sheet);
        report.result("chain", serde_json::to_value(&chain).expect("serializable"));
        report.check(Check::new(
            "chain-consistent",
            chain.consistent,
            json!(chain.mismatch),
        ));
        let weighted = if chain.weighted_step_holds {
            Status::Pass
        } else {
            Status::OpenQuestion
        };
        report.check(Check::with_status(
            "chain-weighted-step",
            weighted,
            json!({
                "weighted": format_rat(&chain.weighted_strata),
                "quotient": chain.quotient_strata.as_ref().map(format_rat),
            }),
        ));
    }
    if let Some(name) = args.fixture {
        for c in fixture_expectations(name, &sheet, euler, lefschetz) {
            report.check(c);
        }
    }
    if let Some(path) = &args.out {
        write_output(path, &sheet.to_json())?;
    }
    Ok(report)
}
