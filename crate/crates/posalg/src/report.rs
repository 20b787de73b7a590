//! Structured outcome of a theorem-style check.
//!
//! Reports serialize to single-line JSON with a stable field order, so
//! identical inputs always produce byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Name of the check that produced this report.
    pub check: String,
    /// Overall verdict: every assertion the check made held exactly.
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radical_dim: Option<usize>,
    /// Serialized witness of the first failed assertion, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Additional key/value payload; sorted keys keep output stable.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            pass: true,
            dim: None,
            radical_dim: None,
            witness: None,
            details: BTreeMap::new(),
        }
    }

    pub fn fail(&mut self, witness: impl Into<String>) {
        self.pass = false;
        if self.witness.is_none() {
            self.witness = Some(witness.into());
        }
    }

    /// Records `pass` for a named assertion, downgrading the verdict and
    /// capturing the witness on the first failure.
    pub fn assert_that(&mut self, name: &str, ok: bool) {
        self.details.insert(name.to_string(), Value::Bool(ok));
        if !ok {
            self.fail(name.to_string());
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
