use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of one verification suite. `overall` is `Pass` iff every check
/// passed (an empty report passes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new(), overall: Status::Pass }
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        let status = if ok { Status::Pass } else { Status::Fail };
        if !ok {
            self.overall = Status::Fail;
        }
        self.checks.push(Check { id: id.into(), status, detail: detail.into() });
        ok
    }

    pub fn pass(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.check(id, true, detail);
    }

    pub fn fail(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.check(id, false, detail);
    }

    /// Appends every check of `other`, prefixing ids with its suite name.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.check(format!("{}/{}", other.suite, c.id), c.status == Status::Pass, c.detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.id)?;
            } else {
                writeln!(f, "{tag} {}: {}", c.id, c.detail)?;
            }
        }
        let n_fail = self.failures().count();
        write!(
            f,
            "{}: {} ({} checks, {} failed)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            n_fail
        )
    }
}
