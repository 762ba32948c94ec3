//! Report types.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use spinstat::Tolerances;

use crate::checks::CheckKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// One check of one scenario.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub check: CheckKind,
    pub status: Status,
    pub measured: Map<String, Value>,
    pub expected: Map<String, Value>,
    pub detail: String,
    /// Sample count the check used (0 for deterministic checks).
    pub samples: usize,
    pub threshold: Option<f64>,
    /// Milliseconds; `None` when timing is disabled.
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub name: String,
    pub target: Option<String>,
    pub seed: Option<u64>,
    pub status: Status,
    pub tolerances: Tolerances,
    pub entries: Vec<Entry>,
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    /// Version of the spinstat library that produced the report.
    pub version: String,
    pub status: Status,
    pub summary: Summary,
    pub scenarios: Vec<ScenarioReport>,
}

impl Report {
    pub fn new(scenarios: Vec<ScenarioReport>) -> Self {
        let mut summary = Summary::default();
        for e in scenarios.iter().flat_map(|s| &s.entries) {
            match e.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        let status = if summary.fail + summary.error == 0 { Status::Pass } else { Status::Fail };
        Report { version: spinstat::VERSION.to_string(), status, summary, scenarios }
    }

    /// Process exit code: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            _ => 1,
        }
    }
}
