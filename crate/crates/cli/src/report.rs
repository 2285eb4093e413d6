//! Machine-readable run reports.

use std::time::Duration;

use mckay_core::orbifold::{Provenance, Tagged};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A disagreement with a published value that is reported, not failed.
    OpenQuestion,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Self {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    pub fn with_status(name: impl Into<String>, status: Status, detail: Value) -> Self {
        Self {
            name: name.into(),
            status,
            detail,
        }
    }

    /// `actual == expected`, recording both and where the expectation comes from.
    pub fn expect<T: Serialize + PartialEq>(
        name: impl Into<String>,
        actual: T,
        expected: T,
        source: Provenance,
    ) -> Self {
        let passed = actual == expected;
        Self::new(
            name,
            passed,
            json!({ "actual": actual, "expected": expected, "provenance": source }),
        )
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// A value computed by the engine.
pub fn computed(value: impl Serialize) -> Value {
    json!({ "value": value, "provenance": "computed" })
}

/// A value carried by a sheet or fixture, with its tag.
pub fn tagged(value: Tagged) -> Value {
    json!({ "value": value.value, "provenance": value.provenance })
}

/// SHA-256 over the command line and the contents of every input file.
pub fn input_digest(command: &[String], inputs: &[(String, Vec<u8>)]) -> String {
    let mut hasher = Sha256::new();
    for arg in command {
        hasher.update((arg.len() as u64).to_le_bytes());
        hasher.update(arg.as_bytes());
    }
    for (name, bytes) in inputs {
        hasher.update((name.len() as u64).to_le_bytes());
        hasher.update(name.as_bytes());
        hasher.update((bytes.len() as u64).to_le_bytes());
        hasher.update(bytes);
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub counterexample: Option<Value>,
    pub wall_time: Duration,
}

impl RunReport {
    pub fn new(command: Vec<String>, inputs: &[(String, Vec<u8>)]) -> Self {
        let input_digest = input_digest(&command, inputs);
        Self {
            command,
            input_digest,
            ..Self::default()
        }
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn check(&mut self, check: Check) {
        if check.failed() && self.counterexample.is_none() {
            self.counterexample = Some(json!({ "check": check.name, "detail": check.detail }));
        }
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "checks": self.checks,
            "passed": self.passed(),
            "wall_time_ms": self.wall_time.as_millis() as u64,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = c.clone();
        }
        v
    }

    /// Pretty JSON; object keys come out sorted.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("reports are valid JSON")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::OpenQuestion => "OPEN",
            };
            out.push_str(&format!("{tag} {}\n", c.name));
        }
        out
    }
}

/// The report with the wall-time field removed, for reproducibility checks.
pub fn without_wall_time(report: &str) -> Value {
    let mut v: Value = serde_json::from_str(report).expect("report JSON");
    if let Some(obj) = v.as_object_mut() {
        obj.remove("wall_time_ms");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_inputs() {
        let cmd = vec!["group".to_string()];
        let a = input_digest(&cmd, &[]);
        assert_eq!(a.len(), 64);
        assert_eq!(a, input_digest(&cmd, &[]));
        assert_ne!(a, input_digest(&cmd, &[("f".into(), b"x".to_vec())]));
        assert_ne!(
            input_digest(&["ab".into(), "c".into()], &[]),
            input_digest(&["a".into(), "bc".into()], &[])
        );
    }

    #[test]
    fn keys_are_sorted_and_failures_recorded() {
        let mut r = RunReport::new(vec!["x".into()], &[]);
        r.result("zeta", computed(1));
        r.result("alpha", computed(2));
        r.check(Check::expect("a", 1, 1, Provenance::Trivial));
        r.check(Check::expect("b", 1, 2, Provenance::Paper));
        assert!(!r.passed());
        let text = r.to_json();
        assert!(text.find("\"alpha\"").unwrap() < text.find("\"zeta\"").unwrap());
        assert_eq!(r.counterexample.as_ref().unwrap()["check"], "b");
        assert!(r.summary().contains("FAIL b"));
    }
}
