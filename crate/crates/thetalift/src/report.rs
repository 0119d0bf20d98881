//! Check records and the report document emitted by the command-line tool.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cocycle::COCYCLE_CONVENTION;
use crate::orbits::GK_CONVENTIONS;
use crate::scalars::smallest_primitive_root;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckRecord {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Pass, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Self { name: name.into(), status: Status::Fail, witness: Some(witness) }
    }

    pub fn skip(name: impl Into<String>, reason: &str) -> Self {
        Self { name: name.into(), status: Status::Skip, witness: Some(json!({ "reason": reason })) }
    }

    /// A passing record that still carries the computed values.
    pub fn pass_with(name: impl Into<String>, values: Value) -> Self {
        Self { name: name.into(), status: Status::Pass, witness: Some(values) }
    }

    pub fn from_outcome(name: impl Into<String>, ok: bool, values: Value) -> Self {
        if ok {
            Self::pass_with(name, values)
        } else {
            Self::fail(name, values)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub conventions: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub seed: u64,
}

impl Report {
    pub fn new(command: &str, params: BTreeMap<String, Value>, p: u64, seed: u64) -> Self {
        Self { command: command.into(), params, conventions: conventions(p), checks: Vec::new(), seed }
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(checks);
    }

    /// Sorts the checks by name; call once before emitting.
    pub fn finish(mut self) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn to_text(&self) -> String {
        let mut out = self.command.to_string();
        for (k, v) in &self.params {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push_str(&format!(" seed={}\n", self.seed));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            match &c.witness {
                Some(w) => out.push_str(&format!("  [{tag}] {}: {w}\n", c.name)),
                None => out.push_str(&format!("  [{tag}] {}\n", c.name)),
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

pub fn conventions(p: u64) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    let root = smallest_primitive_root(p)
        .map(|g| format!("smallest primitive root mod {p}: {g}"))
        .unwrap_or_else(|e| e.to_string());
    m.insert("primitive_root".into(), root);
    m.insert("cocycle".into(), COCYCLE_CONVENTION.into());
    m.insert("gk".into(), GK_CONVENTIONS.into());
    m
}
