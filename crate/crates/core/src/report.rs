//! Pass/fail records produced by every verifier.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::field::Scalar;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), passed: true, witness: None }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        Check { id: id.into(), passed: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(id: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(id)
        } else {
            Self::fail(id, witness())
        }
    }

    /// Exact matrix equality; the witness names the first differing entry.
    pub fn matrices(id: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> Self {
        match lhs.first_difference(rhs) {
            None => Self::pass(id),
            Some((r, c)) if lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() => {
                Self::fail(id, format!("entry ({r},{c}): lhs {} != rhs {}", lhs.get(r, c), rhs.get(r, c)))
            }
            Some(_) => Self::fail(id, "shape mismatch"),
        }
    }

    pub fn scalars(id: impl Into<String>, lhs: &Scalar, rhs: &Scalar) -> Self {
        Self::from_bool(id, lhs == rhs, || format!("lhs {lhs} != rhs {rhs}"))
    }
}

/// An ordered list of checks for one instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub instance: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(instance: impl ToString) -> Self {
        VerificationReport { instance: instance.to_string(), checks: Vec::new() }
    }

    pub fn with_checks(instance: impl ToString, checks: Vec<Check>) -> Self {
        VerificationReport { instance: instance.to_string(), checks }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
