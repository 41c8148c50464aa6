//! Property-check reports.
//!
//! A [`CheckReport`] records one property: how many inputs were tried, the
//! worst violation seen and the worst offending inputs. A [`CheckSuite`]
//! groups the reports produced by one run.

use serde::Serialize;

/// How many witnesses a report keeps. The worst violations win.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub violation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub passed: bool,
    pub samples: usize,
    pub tolerance: f64,
    pub max_violation: f64,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn builder(property: impl Into<String>, tolerance: f64) -> CheckBuilder {
        CheckBuilder {
            property: property.into(),
            tolerance,
            samples: 0,
            max_violation: 0.0,
            witnesses: Vec::new(),
        }
    }
}

/// Accumulates violations for one property.
///
/// NaN violations count as infinite so that a blown-up computation can never
/// pass.
#[derive(Debug)]
pub struct CheckBuilder {
    property: String,
    tolerance: f64,
    samples: usize,
    max_violation: f64,
    witnesses: Vec<Witness>,
}

impl CheckBuilder {
    /// Records one evaluated input. `inputs` is only called when the
    /// violation exceeds the tolerance.
    pub fn record<F>(&mut self, violation: f64, inputs: F)
    where
        F: FnOnce() -> Vec<String>,
    {
        let violation = if violation.is_nan() {
            f64::INFINITY
        } else {
            violation.max(0.0)
        };
        self.samples += 1;
        if violation > self.max_violation {
            self.max_violation = violation;
        }
        if violation > self.tolerance {
            let worst_kept = self.witnesses.len() == MAX_WITNESSES
                && self
                    .witnesses
                    .last()
                    .is_some_and(|w| w.violation >= violation);
            if !worst_kept {
                self.witnesses.push(Witness {
                    inputs: inputs(),
                    violation,
                });
                // stable sort keeps the first-seen witness among ties
                self.witnesses
                    .sort_by(|a, b| b.violation.total_cmp(&a.violation));
                self.witnesses.truncate(MAX_WITNESSES);
            }
        }
    }

    pub fn finish(self) -> CheckReport {
        CheckReport {
            passed: self.max_violation <= self.tolerance,
            property: self.property,
            samples: self.samples,
            tolerance: self.tolerance,
            max_violation: self.max_violation,
            witnesses: self.witnesses,
        }
    }
}

/// The reports of one verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSuite {
    pub name: String,
    pub seed: Option<u64>,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl CheckSuite {
    pub fn new(name: impl Into<String>, seed: Option<u64>, checks: Vec<CheckReport>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        CheckSuite {
            name: name.into(),
            seed,
            passed,
            checks,
        }
    }

    pub fn max_violation(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_violation)
            .fold(0.0, f64::max)
    }

    pub fn check(&self, property: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.property == property)
    }

    /// The first failing report, if any.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: CheckSuite) {
        self.checks.extend(other.checks);
        self.passed = self.checks.iter().all(|c| c.passed);
    }
}
