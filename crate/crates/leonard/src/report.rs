//! JSON and text renderings of verification reports.

use std::fmt::Write;

use leonard_core::report::VerificationReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub instance: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl From<&VerificationReport> for ReportFile {
    fn from(report: &VerificationReport) -> Self {
        let checks = report
            .checks
            .iter()
            .map(|c| CheckRecord {
                id: c.id.clone(),
                status: if c.passed { Status::Pass } else { Status::Fail },
                witness: c.witness.clone(),
            })
            .collect();
        ReportFile {
            instance: report.instance.clone(),
            checks,
            summary: Summary { pass: report.passed(), fail: report.failed() },
        }
    }
}

pub fn to_json(report: &VerificationReport) -> String {
    let mut out = serde_json::to_string_pretty(&ReportFile::from(report)).expect("reports serialize");
    out.push('\n');
    out
}

/// One line per check, failures with their witness, then the counts.
pub fn to_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        match &c.witness {
            _ if c.passed => writeln!(out, "pass  {}", c.id),
            Some(w) => writeln!(out, "FAIL  {}: {w}", c.id),
            None => writeln!(out, "FAIL  {}", c.id),
        }
        .unwrap();
    }
    writeln!(out, "{}: {} passed, {} failed", report.instance, report.passed(), report.failed()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use leonard_core::report::Check;

    fn sample() -> VerificationReport {
        VerificationReport::with_checks("x", vec![Check::pass("a"), Check::fail("b", "E_2 A* E_0 is nonzero")])
    }

    #[test]
    fn json_shape() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&sample())).unwrap();
        assert_eq!(v["instance"], "x");
        assert_eq!(v["checks"][0], serde_json::json!({"id": "a", "status": "pass"}));
        assert_eq!(v["checks"][1]["witness"], "E_2 A* E_0 is nonzero");
        assert_eq!(v["summary"], serde_json::json!({"pass": 1, "fail": 1}));
    }

    #[test]
    fn text_shape() {
        let text = to_text(&sample());
        assert!(text.contains("FAIL  b: E_2 A* E_0 is nonzero"));
        assert!(text.ends_with("x: 1 passed, 1 failed\n"));
    }
}
