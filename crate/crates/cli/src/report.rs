//! Command reports.

use germwork_core::{Verdict, Violation};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Check {
            name: name.into(),
            status,
            witness: None,
            detail: None,
            value: None,
        }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Check::new(name, Status::Pass)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check::new(name, Status::Fail).with_detail(detail)
    }

    pub fn info(name: impl Into<String>, value: impl Into<Value>) -> Self {
        Check::new(name, Status::Info).with_value(value)
    }

    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_value(mut self, value: impl Into<Value>) -> Self {
        self.value = Some(value.into()).filter(|v| !v.is_null());
        self
    }

    pub fn with_witness(mut self, witness: Vec<String>) -> Self {
        self.witness = Some(witness);
        self
    }
}

/// What the report was computed from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Inputs {
    pub source: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Inputs,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl Report {
    /// Sorts the checks by name and derives the overall status.
    pub fn new(command: &str, inputs: Inputs, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            command: command.to_string(),
            inputs,
            status,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Turns element indices into labels.
pub type Namer<'a> = &'a dyn Fn(usize) -> String;

pub fn witness(v: &Violation, name: Namer<'_>) -> Vec<String> {
    v.witness.iter().map(|&x| name(x)).collect()
}

/// A pass or a failure carrying the violated law and its witness.
pub fn from_verdict(check: &str, verdict: &Verdict, name: Namer<'_>) -> Check {
    match verdict {
        Verdict::Pass => Check::pass(check),
        Verdict::Fail(v) => Check::fail(check, v.law.clone()).with_witness(witness(v, name)),
    }
}

/// An informational entry stating whether a property holds.
pub fn info_verdict(check: &str, verdict: &Verdict, name: Namer<'_>) -> Check {
    let c = Check::info(check, verdict.is_pass());
    match verdict {
        Verdict::Pass => c,
        Verdict::Fail(v) => c.with_detail(v.law.clone()).with_witness(witness(v, name)),
    }
}
