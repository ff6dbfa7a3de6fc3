//! Pass/fail records produced by the verification routines.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// Degree bound the check was run at.
    pub degree: usize,
    pub passed: bool,
    /// First failing input, rendered as text.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, name: impl Into<String>, degree: usize) {
        self.record(name, degree, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, degree: usize, counterexample: impl Into<String>) {
        self.record(name, degree, Some(counterexample.into()));
    }

    /// Records a pass when `counterexample` is `None`.
    pub fn record(&mut self, name: impl Into<String>, degree: usize, counterexample: Option<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            degree,
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    /// Records a boolean check with a fixed failure message.
    pub fn check(&mut self, name: impl Into<String>, degree: usize, ok: bool, detail: impl FnOnce() -> String) {
        let ce = if ok { None } else { Some(detail()) };
        self.record(name, degree, ce);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "PASS  {} (degree ≤ {})", c.name, c.degree)?,
                Some(ce) => writeln!(f, "FAIL  {} (degree ≤ {}): {}", c.name, c.degree, ce)?,
            }
        }
        Ok(())
    }
}
