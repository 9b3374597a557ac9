use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::symchar::Decomposition;

/// One named pass/fail assertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// A check comparing two displayable values for equality.
    pub fn equal<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, got: &T, expected: &T) -> Self {
        let passed = got == expected;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {expected:?}") };
        Check::new(name, passed, detail)
    }
}

/// Homology of the adjoint complex in one weight, as `S_n x S_r` bimodules.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub r: usize,
    pub n: usize,
    pub h1: Option<Decomposition>,
    pub h0: Option<Decomposition>,
    pub h1_dim: Option<u64>,
    pub h0_dim: Option<u64>,
    pub elapsed_ms: u64,
    pub checks: Vec<Check>,
}

impl HomologyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub homology: Vec<HomologyReport>,
    /// Exact constants, rationals written as `p/q`.
    pub constants: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), checks: Vec::new(), homology: Vec::new(), constants: BTreeMap::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.homology.iter().all(HomologyReport::passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().chain(self.homology.iter().flat_map(|h| &h.checks)).filter(|c| !c.passed).collect()
    }
}
