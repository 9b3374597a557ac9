use std::collections::BTreeMap;

use lieho::homology::{HomologyReport, SuiteReport};
use lieho::symchar::Decomposition;
use serde::{Deserialize, Serialize};

pub const SCHEMA_ID: &str = "lieho-report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Results {
    Verify { suites: Vec<SuiteReport> },
    Homology { report: HomologyReport },
    Character { shape: String, n: usize, decomposition: Decomposition },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
}

/// Everything one invocation prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    pub results: Results,
    pub timings: Timings,
}

impl ReportDocument {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// CSV rows `lambda,mu,mult` with dotted partitions; homology with both
    /// groups gets a leading `group` column.
    pub fn to_csv(&self) -> Option<String> {
        let rows = |d: &Decomposition, prefix: &str| -> String {
            d.iter().map(|m| format!("{prefix}{},{},{}\n", m.lambda.dotted(), m.mu.dotted(), m.mult)).collect()
        };
        match &self.results {
            Results::Character { decomposition, .. } => Some(format!("lambda,mu,mult\n{}", rows(decomposition, ""))),
            Results::Homology { report } => match (&report.h0, &report.h1) {
                (Some(h0), Some(h1)) => Some(format!("group,lambda,mu,mult\n{}{}", rows(h0, "h0,"), rows(h1, "h1,"))),
                (None, Some(d)) | (Some(d), None) => Some(format!("lambda,mu,mult\n{}", rows(d, ""))),
                (None, None) => Some("lambda,mu,mult\n".into()),
            },
            Results::Verify { .. } => None,
        }
    }
}
