//! Verification reports: one record per check, grouped per suite.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    /// A mismatch between a stated formula and the ground truth, kept on record; not a failure.
    DiscrepancyRecorded,
    Fail,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// The more severe of the two.
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::DiscrepancyRecorded => "DISCREPANCY_RECORDED",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub params: Value,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub status: Status,
    pub details: String,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, params: Value, status: Status, details: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            params,
            lhs: None,
            rhs: None,
            status,
            details: details.into(),
        }
    }

    pub fn with_sides(mut self, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(Status::Fail) > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} checks, {} passed, {} failed, {} discrepancies recorded",
            self.suite,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::DiscrepancyRecorded)
        )
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.checks.iter().filter(|c| c.status != Status::DiscrepancyRecorded) {
            writeln!(f, "{:<5} {}  {}", c.status.to_string(), c.name, c.details)?;
        }
        let disc: Vec<_> = self
            .checks
            .iter()
            .filter(|c| c.status == Status::DiscrepancyRecorded)
            .collect();
        if !disc.is_empty() {
            writeln!(f, "discrepancies recorded:")?;
            for c in disc {
                writeln!(f, "  {}  {}", c.name, c.details)?;
            }
        }
        write!(f, "{}", self.summary())
    }
}
