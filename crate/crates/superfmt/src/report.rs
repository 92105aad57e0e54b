//! Verification reports: named exact checks with pass/fail results.

use std::fmt;

use serde::Serialize;

use crate::matrix::Matrix;

/// One verified identity. For failures the residual (left minus right hand
/// side) is kept so the offending matrix can be inspected.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Matrix>,
}

impl Check {
    /// Records an exact comparison of two matrices.
    pub fn equality(name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> Self {
        let residual = lhs - rhs;
        if residual.is_zero() {
            Check {
                name: name.into(),
                passed: true,
                residual: None,
            }
        } else {
            Check {
                name: name.into(),
                passed: false,
                residual: Some(residual),
            }
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            residual: None,
        }
    }
}

/// An ordered list of checks; failures are data, not errors.
#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for VerificationReport {
    /// One line per check (`ok NAME` / `FAIL NAME`) plus a summary line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            writeln!(
                f,
                "{} {}",
                if check.passed { "ok  " } else { "FAIL" },
                check.name
            )?;
        }
        write!(f, "{} / {} checks passed", self.passed_count(), self.len())
    }
}
