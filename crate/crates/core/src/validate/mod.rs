//! Cross-validation engine: check records, suite runner, and the
//! independent numerical oracles (double-double summation, quadrature,
//! finite differences) behind them.
//!
//! Oracles never call a closed-form evaluator; they use only specfun
//! primitives, direct summation, quadrature and finite differences, so a
//! green check means two genuinely different routes agreed.

pub mod suites;

use alloc::string::String;
use alloc::vec::Vec;

use crate::math;

/// One identity check: both sides, errors, tolerance, verdict.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckResult {
    pub id: String,
    pub citation: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
}

impl CheckResult {
    /// Build a record; `pass` is exactly `abs_err <= tol || rel_err <= tol`.
    pub fn new(id: String, citation: &str, lhs: f64, rhs: f64, tol: f64) -> Self {
        let abs_err = math::fabs(lhs - rhs);
        let rel_err = if rhs != 0.0 {
            abs_err / math::fabs(rhs)
        } else {
            abs_err
        };
        // non-finite sides always fail but must serialize as numbers
        let (abs_err, rel_err) = if abs_err.is_finite() && rel_err.is_finite() {
            (abs_err, rel_err)
        } else {
            (f64::MAX, f64::MAX)
        };
        let pass = abs_err <= tol || rel_err <= tol;
        CheckResult {
            id,
            citation: String::from(citation),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            pass,
        }
    }
}

/// A suite's worth of checks with summary counts; assembly is order-stable
/// (sorted by check id), so two runs are bit-identical.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ValidationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl ValidationReport {
    pub fn from_checks(suite: &str, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let total = checks.len();
        let passed = checks.iter().filter(|c| c.pass).count();
        ValidationReport {
            suite: String::from(suite),
            checks,
            total,
            passed,
            failed: total - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Suite names accepted by the runner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Relations,
    Theorems,
    Tables,
    Sums,
    Decay,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] = [
        SuiteName::Relations,
        SuiteName::Theorems,
        SuiteName::Tables,
        SuiteName::Sums,
        SuiteName::Decay,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SuiteName::Relations => "relations",
            SuiteName::Theorems => "theorems",
            SuiteName::Tables => "tables",
            SuiteName::Sums => "sums",
            SuiteName::Decay => "decay",
        }
    }
}

impl core::str::FromStr for SuiteName {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "relations" => Ok(SuiteName::Relations),
            "theorems" => Ok(SuiteName::Theorems),
            "tables" => Ok(SuiteName::Tables),
            "sums" => Ok(SuiteName::Sums),
            "decay" => Ok(SuiteName::Decay),
            _ => Err(()),
        }
    }
}

/// Run one named suite; failures are data, not errors.
pub fn run_suite(name: SuiteName) -> ValidationReport {
    let checks = match name {
        SuiteName::Relations => suites::relations(),
        SuiteName::Theorems => suites::theorems(),
        SuiteName::Tables => suites::tables(),
        SuiteName::Sums => suites::sums(),
        SuiteName::Decay => suites::decay(),
    };
    ValidationReport::from_checks(name.label(), checks)
}

/// SplitMix64: tiny, seedable, and bit-stable forever, which is what the
/// reproducibility contract needs from the property-test point sets.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

/// Fixed seed shared by every randomized check set.
pub const RNG_SEED: u64 = 0x5EED;

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    #[test]
    fn check_result_invariant() {
        let c = CheckResult::new(String::from("a"), "cit", 1.0, 1.0 + 1e-12, 1e-10);
        assert!(c.pass);
        assert_eq!(c.pass, c.abs_err <= c.tol || c.rel_err <= c.tol);
        let f = CheckResult::new(String::from("b"), "cit", 1.0, 2.0, 1e-10);
        assert!(!f.pass);
        // rhs = 0: relative error degrades to absolute
        let z = CheckResult::new(String::from("c"), "cit", 1e-12, 0.0, 1e-10);
        assert!(z.pass && z.rel_err == z.abs_err);
    }

    #[test]
    fn report_counts_and_ordering() {
        let checks = alloc::vec![
            CheckResult::new(String::from("z"), "c", 1.0, 1.0, 1e-10),
            CheckResult::new(String::from("a"), "c", 1.0, 3.0, 1e-10),
        ];
        let r = ValidationReport::from_checks("demo", checks);
        assert_eq!((r.total, r.passed, r.failed), (2, 1, 1));
        assert_eq!(r.checks[0].id, "a");
        assert!(!r.all_passed());
    }

    #[test]
    fn empty_report_is_vacuously_passing() {
        let r = ValidationReport::from_checks("empty", Vec::new());
        assert_eq!(r.total, 0);
        assert!(r.all_passed());
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = Rng::new(RNG_SEED);
        let mut b = Rng::new(RNG_SEED);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let v = a.next_f64();
        assert!((0.0..1.0).contains(&v));
    }
}
