//! Verification reports shared by every checker.

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one verifier call: `{check, inputs, pass, residuals}`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub inputs: Value,
    pub pass: bool,
    pub residuals: Vec<Value>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub notes: Map<String, Value>,
}

impl CheckReport {
    pub fn new(check: &str, inputs: Value) -> Self {
        CheckReport { check: check.to_string(), inputs, pass: true, residuals: Vec::new(), notes: Map::new() }
    }

    /// Records a nonzero residual and marks the report failed.
    pub fn fail(&mut self, residual: Value) {
        self.pass = false;
        self.residuals.push(residual);
    }

    /// Records a failure when `ok` is false.
    pub fn expect(&mut self, ok: bool, residual: impl FnOnce() -> Value) {
        if !ok {
            self.fail(residual());
        }
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.notes.insert(key.to_string(), value.into());
    }

    /// Folds a sub-report into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        if !other.pass {
            self.pass = false;
            self.residuals.push(serde_json::json!({
                "check": other.check,
                "inputs": other.inputs,
                "residuals": other.residuals,
            }));
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
