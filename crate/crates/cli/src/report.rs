//! JSON report document: the validation report plus wall time, one record
//! per check with fields {id, citation, lhs, rhs, abs_err, rel_err, tol,
//! pass}.

use mlwright::ValidationReport;
use serde::Serialize;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

#[derive(Serialize)]
pub struct ReportDocument<'a> {
    pub suite: &'a str,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: f64,
    pub checks: &'a [mlwright::CheckResult],
}

impl<'a> ReportDocument<'a> {
    pub fn new(report: &'a ValidationReport, elapsed: Duration) -> Self {
        ReportDocument {
            suite: &report.suite,
            total: report.total,
            passed: report.passed,
            failed: report.failed,
            wall_time_ms: elapsed.as_secs_f64() * 1e3,
            checks: &report.checks,
        }
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        let body = serde_json::to_string_pretty(self)?;
        f.write_all(body.as_bytes())?;
        f.write_all(b"\n")
    }
}

/// 17 significant digits: round-trips any f64 exactly through decimal.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt17_roundtrips() {
        for &v in &[1.0, -0.1, 7.389_056_098_930_65, 1e-300, 3.33e300] {
            let s = fmt17(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{s}");
        }
    }
}
