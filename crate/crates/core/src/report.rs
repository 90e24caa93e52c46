//! Structured pass/fail reports for the verification suites.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One checked statement. A failing case carries a witness that shows the
/// offending inputs and both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub label: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Number of individual identities checked inside the case.
    pub checks: u64,
}

impl Case {
    pub fn pass(label: impl Into<String>, checks: u64) -> Case {
        Case {
            label: label.into(),
            passed: true,
            witness: None,
            checks,
        }
    }

    pub fn fail(label: impl Into<String>, checks: u64, witness: impl Into<String>) -> Case {
        Case {
            label: label.into(),
            passed: false,
            witness: Some(witness.into()),
            checks,
        }
    }

    /// Builds a case from the first failing witness, if any.
    pub fn from_result(label: impl Into<String>, checks: u64, failure: Option<String>) -> Case {
        match failure {
            None => Case::pass(label, checks),
            Some(w) => Case::fail(label, checks, w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub n: usize,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: impl Into<String>, n: usize, cases: Vec<Case>) -> Report {
        Report {
            suite: suite.into(),
            n,
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn checks(&self) -> u64 {
        self.cases.iter().map(|c| c.checks).sum()
    }

    /// One summary line, then one line per failing case with its witness.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {} n={} cases={} checks={}",
            self.suite,
            self.n,
            self.cases.len(),
            self.checks()
        );
        for c in self.failures() {
            let _ = writeln!(out, "  failed: {}", c.label);
            if let Some(w) = &c.witness {
                for line in w.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        out
    }

    /// Per-case listing, used for verbose output.
    pub fn to_text_verbose(&self) -> String {
        let mut out = self.to_text();
        for c in &self.cases {
            let _ = writeln!(
                out,
                "  {} {}",
                if c.passed { "ok  " } else { "FAIL" },
                c.label
            );
        }
        out
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
