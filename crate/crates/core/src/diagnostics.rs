//! Per-law verdicts with witnesses.
//!
//! Validation routines that must report every failing axiom (instead of
//! stopping at the first error) return a [`Diagnostics`] value.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail {
        witness: Vec<String>,
    },
    /// Accepted without a search; the string says why.
    Waived {
        reason: String,
    },
    NotApplicable {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub law: String,
    #[serde(flatten)]
    pub status: Status,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub checks: Vec<Check>,
}

impl Diagnostics {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, law: impl Into<String>) {
        self.push(law, Status::Pass);
    }

    pub fn fail(&mut self, law: impl Into<String>, witness: Vec<String>) {
        self.push(law, Status::Fail { witness });
    }

    pub fn waive(&mut self, law: impl Into<String>, reason: impl Into<String>) {
        self.push(
            law,
            Status::Waived {
                reason: reason.into(),
            },
        );
    }

    pub fn not_applicable(&mut self, law: impl Into<String>, reason: impl Into<String>) {
        self.push(
            law,
            Status::NotApplicable {
                reason: reason.into(),
            },
        );
    }

    /// Records `Pass` when `witness` is `None`, `Fail` otherwise.
    pub fn record(&mut self, law: impl Into<String>, witness: Option<Vec<String>>) {
        match witness {
            None => self.pass(law),
            Some(w) => self.fail(law, w),
        }
    }

    pub fn push(&mut self, law: impl Into<String>, status: Status) {
        self.checks.push(Check {
            law: law.into(),
            status,
        });
    }

    pub fn extend(&mut self, other: Diagnostics) {
        self.checks.extend(other.checks);
    }

    /// True when no check failed. Waived and not-applicable checks count as passing.
    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail { .. }))
    }

    pub fn get(&self, law: &str) -> Option<&Status> {
        self.checks.iter().find(|c| c.law == law).map(|c| &c.status)
    }

    pub fn passed(&self, law: &str) -> bool {
        matches!(self.get(law), Some(Status::Pass))
    }

    pub fn failed(&self, law: &str) -> bool {
        matches!(self.get(law), Some(Status::Fail { .. }))
    }
}
