//! Pass/fail reports for law checking.  Failures are data, not errors: a
//! checker runs every law it knows and reports each verdict under the label
//! the rest of the crate (and the CLI) uses for it.

use std::fmt;

/// First basis entry at which two sides of an equality differ: entry
/// `(row, col)` of the difference, in deterministic order (columns outer,
/// rows inner).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub label: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// An ordered list of law verdicts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, label: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(LawCheck {
            label: label.into(),
            pass: witness.is_none(),
            witness,
        });
    }

    pub fn record_bool(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(LawCheck {
            label: label.into(),
            pass,
            witness: None,
        });
    }

    pub fn merge(&mut self, prefix: &str, other: LawReport) {
        for mut c in other.checks {
            c.label = format!("{prefix}{}", c.label);
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&LawCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn get(&self, label: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.label == label)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => writeln!(f, "{} ok", c.label)?,
                (false, Some(w)) => {
                    writeln!(f, "{} FAIL witness ({}, {})", c.label, w.row, w.col)?
                }
                (false, None) => writeln!(f, "{} FAIL", c.label)?,
            }
        }
        Ok(())
    }
}
