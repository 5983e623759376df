//! Pass/fail reports produced by the verifiers.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The clause does not apply to this instance.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub status: Status,
    /// Offending element, ideal or pair when the clause fails; a note otherwise.
    pub witness: Option<String>,
}

/// Named clauses plus free-form facts (orders, presentations, ...).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub operation: String,
    pub clauses: Vec<Clause>,
    pub facts: BTreeMap<String, String>,
}

impl Report {
    pub fn new(operation: impl Into<String>) -> Report {
        Report {
            operation: operation.into(),
            ..Default::default()
        }
    }

    pub fn clause(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) -> &mut Self {
        self.clauses.push(Clause {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness,
        });
        self
    }

    pub fn pass(&mut self, name: impl Into<String>) -> &mut Self {
        self.clause(name, true, None)
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) -> &mut Self {
        self.clause(name, false, Some(witness.into()))
    }

    pub fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) -> &mut Self {
        self.clauses.push(Clause {
            name: name.into(),
            status: Status::Skipped,
            witness: Some(why.into()),
        });
        self
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.facts.insert(key.into(), value.to_string());
        self
    }

    /// Appends another report's clauses under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: &Report) -> &mut Self {
        for c in &other.clauses {
            self.clauses.push(Clause {
                name: format!("{prefix}.{}", c.name),
                ..c.clone()
            });
        }
        for (k, v) in &other.facts {
            self.facts.insert(format!("{prefix}.{k}"), v.clone());
        }
        self
    }

    /// No clause failed.
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status(&self, name: &str) -> Option<Status> {
        self.clauses.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.status == Status::Fail)
    }

    /// Sorted `key: value` lines: one per clause and one per fact.
    pub fn machine_lines(&self) -> Vec<String> {
        let mut kv: BTreeMap<String, String> = self.facts.clone();
        for c in &self.clauses {
            kv.insert(c.name.clone(), c.status.to_string());
            if c.status == Status::Fail {
                if let Some(w) = &c.witness {
                    kv.insert(format!("{}.witness", c.name), w.clone());
                }
            }
        }
        kv.insert(self.operation.clone(), if self.passed() { "pass" } else { "fail" }.into());
        kv.into_iter().map(|(k, v)| format!("{k}: {v}")).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.operation, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.clauses {
            write!(f, "  [{}] {}", c.status, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
