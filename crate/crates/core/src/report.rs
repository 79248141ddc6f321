//! Pass/fail reports for law and axiom checking.
//!
//! Reports are line-oriented and deterministic: each named check renders as
//! `NAME PASS` or `NAME FAIL [counterexample]`, in insertion order, so they
//! can be golden-file tested. Merging is associative and order-preserving.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<CheckItem>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push_pass(&mut self, name: &str) {
        self.items.push(CheckItem {
            name: name.to_string(),
            passed: true,
            counterexample: None,
        });
    }

    pub fn push_fail(&mut self, name: &str, counterexample: String) {
        self.items.push(CheckItem {
            name: name.to_string(),
            passed: false,
            counterexample: Some(counterexample),
        });
    }

    /// Record a check outcome: `cex` is `None` for a pass and the first
    /// counterexample found otherwise.
    pub fn push_outcome(&mut self, name: &str, cex: Option<String>) {
        match cex {
            None => self.push_pass(name),
            Some(c) => self.push_fail(name, c),
        }
    }

    pub fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub fn merge(&mut self, other: Report) {
        self.items.extend(other.items);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.items
            .iter()
            .filter(|i| !i.passed)
            .map(|i| i.name.as_str())
            .collect()
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            match &item.counterexample {
                None => writeln!(f, "{} PASS", item.name)?,
                Some(c) => writeln!(f, "{} FAIL [{}]", item.name, c)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "NOTE {}", note)?;
        }
        Ok(())
    }
}
