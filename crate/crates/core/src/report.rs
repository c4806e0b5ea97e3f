//! Outcome records shared by the structural checks.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisStatus {
    Holds,
    Fails,
}

/// Generic check outcome with the fields every report carries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub hypothesis_status: HypothesisStatus,
    pub passed: bool,
    pub counterexample: Option<serde_json::Value>,
    pub computed_order: Option<u64>,
    pub expected_order: Option<u64>,
    pub details: serde_json::Value,
}
