use std::path::PathBuf;
use std::process::{Command, Output};

use mckay_cli::report::without_wall_time;
use serde_json::Value;

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = mckay(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn value(r: &Value, key: &str) -> Value {
    r["results"][key]["value"].clone()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn group_examples() {
    let r = report(&["group", "--fixture", "binary-tetrahedral"]);
    assert_eq!(value(&r, "classes"), 7);
    assert_eq!(value(&r, "invariant"), 3);
    let r = report(&[
        "group",
        "--fixture",
        "cyclic",
        "--n",
        "4",
        "--action",
        "swap",
    ]);
    assert_eq!(value(&r, "invariant"), 2);
    let r = report(&["group", "--gens", "[[z1^0]]"]);
    assert_eq!(value(&r, "order"), 1);
    assert_eq!(value(&r, "classes"), 1);
    let r = report(&[
        "group",
        "--gens",
        "[[z4^1, 0], [0, z4^3]]",
        "--h",
        "[[0, 1], [1, 0]]",
    ]);
    assert_eq!(value(&r, "order"), 4);
    assert_eq!(value(&r, "invariant"), 2);
    let r = report(&["group", "--fixture", "binary-dihedral", "--n", "5"]);
    assert_eq!(value(&r, "invariant"), 4);
}

#[test]
fn swap_parity_is_reported_not_failed() {
    let r = report(&[
        "group",
        "--fixture",
        "cyclic",
        "--n",
        "5",
        "--action",
        "swap",
    ]);
    assert_eq!(value(&r, "invariant"), 1);
    let checks = r["checks"].as_array().unwrap();
    let parity = checks
        .iter()
        .find(|c| c["name"] == "swap-parity-n5")
        .unwrap();
    assert_eq!(parity["status"], "open-question");
    assert_eq!(parity["detail"]["published"], 2);
    assert_eq!(r["passed"], true);
}

#[test]
fn toric_examples() {
    let r = report(&["toric", "--fixture", "z5sq-cycle"]);
    assert_eq!(value(&r, "lefschetz"), 1);
    assert_eq!(value(&r, "fixed_elements"), 1);
    assert_eq!(value(&r, "crepant"), true);
    assert_eq!(value(&r, "simplices"), 25);
    let r = report(&["toric", "--n", "2", "--gen", "1,1@2", "--perm", "(1 2)"]);
    assert_eq!(value(&r, "lefschetz"), 2);
    assert_eq!(value(&r, "fixed_elements"), 2);
    let r = report(&["toric", "--n", "2", "--gen", "", "--perm", "(1 2)"]);
    assert_eq!(value(&r, "lefschetz"), 1);
    let r = report(&["toric", "--fixture", "z5sq-cycle", "--flip", "0"]);
    assert_eq!(value(&r, "lefschetz"), 1);
    assert_eq!(r["passed"], true);
}

#[test]
fn triangulation_documents_round_trip() {
    let path = scratch("z5sq.json");
    let p = path.to_str().unwrap();
    let built = report(&["toric", "--fixture", "z5sq-cycle", "--out", p]);
    let loaded = report(&["toric", "--triangulation", p, "--perm", "(1 2 3)"]);
    assert_eq!(value(&loaded, "simplices"), 25);
    assert_eq!(value(&loaded, "lefschetz"), value(&built, "lefschetz"));
    let again = report(&["toric", "--triangulation", p, "--perm", "(1 2 3)"]);
    assert_eq!(loaded["input_digest"], again["input_digest"]);
    // File contents enter the digest.
    let flipped = report(&[
        "toric",
        "--fixture",
        "z5sq-cycle",
        "--flip",
        "0",
        "--out",
        p,
    ]);
    assert_eq!(value(&flipped, "simplices"), 25);
    let changed = report(&["toric", "--triangulation", p, "--perm", "(1 2 3)"]);
    assert_ne!(loaded["input_digest"], changed["input_digest"]);
}

#[test]
fn orbifold_examples() {
    let r = report(&["orbifold", "--fixture", "quintic-swap"]);
    assert_eq!(value(&r, "lefschetz"), 56);
    let r = report(&["orbifold", "--fixture", "lt-complete-intersection"]);
    assert_eq!(value(&r, "lefschetz"), 16);
    assert!(r["results"]["euler_orbifold"]["missing"].is_string());

    let path = scratch("point.sheet");
    std::fs::write(&path, mckay_core::orbifold::GSpaceSheet::point().to_json()).unwrap();
    let r = report(&["orbifold", "--sheet", path.to_str().unwrap()]);
    assert_eq!(value(&r, "euler_orbifold"), 1);
    assert_eq!(value(&r, "lefschetz"), 1);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| mckay(args).status.code();
    assert_eq!(code(&["group", "--gens", "[[z4^]]"]), Some(2));
    assert_eq!(code(&["group", "--gens", "[[1, 0], [0]]"]), Some(2));
    assert_eq!(
        code(&["group", "--fixture", "cyclic", "--n", "50", "--cap", "10"]),
        Some(3)
    );
    assert_eq!(code(&["toric", "--n", "4", "--gen", "1,1,1,1@2"]), Some(4));
    assert_eq!(code(&["toric", "--n", "3", "--gen", "1,1,1@2"]), Some(2));
    assert_eq!(code(&["verify", "--only", "no-such-check"]), Some(2));
    assert_eq!(code(&["bogus"]), Some(2));

    let path = scratch("bad.sheet");
    std::fs::write(&path, "{\n  \"group_order\": 1,\n  \"classes\": 7\n}\n").unwrap();
    let out = mckay(&["orbifold", "--sheet", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty(), "no partial output");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn verify_examples() {
    let r = report(&["verify", "--only", "mckay2d", "--max-n", "30"]);
    let values = r["checks"][0]["detail"]["values"].as_array().unwrap();
    assert_eq!(values.len(), 30);
    for v in values {
        let n = v["n"].as_u64().unwrap();
        let expected = if n % 2 == 0 { 2 } else { 1 };
        assert_eq!(v["fixed"], expected);
        assert_eq!(v["invariant"], expected);
        assert_eq!(v["lefschetz"], expected.to_string());
    }
    let r = report(&["verify", "--only", "blockdet"]);
    assert_eq!(r["checks"][0]["status"], "pass");
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify",
        "--seed",
        "7",
        "--only",
        "theorem2-random,snf,cyclotomic",
        "--cases",
        "10",
    ];
    let a = mckay(&args);
    let b = mckay(&args);
    assert_eq!(a.status.code(), Some(0));
    let (a, b) = (
        String::from_utf8(a.stdout).unwrap(),
        String::from_utf8(b.stdout).unwrap(),
    );
    assert_eq!(without_wall_time(&a), without_wall_time(&b));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("wall_time_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    let c = String::from_utf8(mckay(&["verify", "--seed", "8", "--only", "snf"]).stdout).unwrap();
    assert_ne!(
        without_wall_time(&a)["input_digest"],
        without_wall_time(&c)["input_digest"]
    );
}

#[test]
fn full_suite_passes() {
    let out = mckay(&["--summary", "verify", "--seed", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("OPEN parity"));
    assert!(!text.contains("FAIL"));
}
