//! Structured verification outcomes.
//!
//! JSON form: `{"n": int, "checks": [{"name", "pass", "counterexample"}], "pass": bool}`.
//! `n` is omitted for reports that are not tied to a matrix order.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub location: String,
    pub left: String,
    pub right: String,
}

impl Counterexample {
    pub fn new(
        location: impl Into<String>,
        left: impl ToString,
        right: impl ToString,
    ) -> Self {
        Counterexample {
            location: location.into(),
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    pub fn passed(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            counterexample: None,
        }
    }

    pub fn failed(name: impl Into<String>, counterexample: Counterexample) -> Self {
        Check {
            name: name.into(),
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    /// Passes iff `counterexample` is `None`.
    pub fn from_outcome(name: impl Into<String>, counterexample: Option<Counterexample>) -> Self {
        match counterexample {
            None => Self::passed(name),
            Some(cx) => Self::failed(name, cx),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(n: Option<usize>, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report { n, checks, pass }
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
