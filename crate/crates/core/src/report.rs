//! Witness-carrying check reports shared by the verification oracles and the
//! per-diagram theorem suites.

use std::fmt;

use serde::Serialize;

/// One counterexample: the roots involved (signed coordinates) and what failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub roots: Vec<Vec<i64>>,
    pub detail: String,
}

impl Witness {
    pub fn new(roots: Vec<Vec<i64>>, detail: impl Into<String>) -> Self {
        Witness {
            roots,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub population: usize,
    pub failures: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            population: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Counts one case, recording a witness when `ok` is false.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.population += 1;
        if !ok {
            self.failures.push(witness());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub diagram: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(diagram: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(Check::passed);
        VerificationReport {
            diagram: diagram.into(),
            checks,
            passed,
        }
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checks.extend(other.checks);
        self.passed = self.checks.iter().all(Check::passed);
        self
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification of {}", self.diagram)?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  {status} {:<28} population {:>9}  failures {}",
                c.name,
                c.population,
                c.failures.len()
            )?;
            for w in c.failures.iter().take(10) {
                let roots: Vec<String> = w.roots.iter().map(|r| format!("{r:?}")).collect();
                writeln!(f, "       {} :: {}", roots.join(" "), w.detail)?;
            }
            if c.failures.len() > 10 {
                writeln!(f, "       ... {} more", c.failures.len() - 10)?;
            }
        }
        write!(
            f,
            "{}",
            if self.passed {
                "ALL CHECKS PASSED"
            } else {
                "VERIFICATION FAILED"
            }
        )
    }
}
