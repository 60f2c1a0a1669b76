//! Machine-readable suite reports. Serialization uses struct field order
//! and sorted keys only, so a fixed configuration (seed included) produces
//! byte-identical JSON.

use serde::Serialize;

/// Uniform envelope for every verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// Configuration echo (flags, seed, parameter draws).
    pub config: serde_json::Value,
    pub checks_run: u64,
    pub pass: bool,
    /// Minimal reproduction hints, empty on success.
    pub failures: Vec<Witness>,
    /// Suite-specific payload (tables, per-relation verdicts, ...).
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// Which check failed (a stable slug).
    pub check: String,
    /// Human-readable reproduction hint.
    pub detail: String,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}
