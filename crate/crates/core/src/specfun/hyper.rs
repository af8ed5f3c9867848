//! Generalized hypergeometric series, plain and regularized.
//!
//! The plain form runs on the term-ratio recurrence. The regularized form
//! builds each term with reciprocal gammas for the lower parameters, so it
//! stays total when a lower parameter is a non-positive integer (those
//! terms are simply zero until the pole is cleared).

use crate::error::{EvalError, Result};
use crate::math;
use crate::specfun::gamma::{is_nonpositive_integer, recip_gamma};
use crate::sum::{SeriesAccumulator, Step};

const MAX_TERMS: usize = 10_000;
const DEFAULT_TOL: f64 = 1e-15;

pub struct PfqEval {
    pub value: f64,
    pub err_est: f64,
    pub terms: usize,
}

fn check_convergence_class(upper: &[f64], lower: &[f64], x: f64) -> Result<()> {
    let p = upper.len();
    let q = lower.len();
    if p > q + 1 && x != 0.0 {
        return Err(EvalError::Domain("pFq diverges for p > q + 1 and x != 0"));
    }
    if p == q + 1 && math::fabs(x) >= 1.0 {
        return Err(EvalError::Domain("pFq with p = q + 1 requires |x| < 1"));
    }
    Ok(())
}

/// Plain ₚFᵩ(a; b; x); no lower parameter may be a non-positive integer.
pub fn pfq(upper: &[f64], lower: &[f64], x: f64) -> Result<PfqEval> {
    for &b in lower {
        if is_nonpositive_integer(b) {
            return Err(EvalError::Pole { arg: b });
        }
    }
    check_convergence_class(upper, lower, x)?;
    let mut acc = SeriesAccumulator::new(DEFAULT_TOL);
    let mut term = 1.0f64;
    for k in 0..MAX_TERMS {
        if let Step::Converged = acc.push(term) {
            return Ok(PfqEval {
                value: acc.value(),
                err_est: acc.err_est(),
                terms: acc.terms,
            });
        }
        if term == 0.0 {
            // a non-positive-integer upper parameter terminated the series
            return Ok(PfqEval {
                value: acc.value(),
                err_est: 0.0,
                terms: acc.terms,
            });
        }
        let kf = k as f64;
        let mut ratio = x / (kf + 1.0);
        for &a in upper {
            ratio *= a + kf;
        }
        for &b in lower {
            ratio /= b + kf;
        }
        term *= ratio;
        if !term.is_finite() {
            return Err(EvalError::Overflow);
        }
    }
    Err(EvalError::NonConvergence { terms: MAX_TERMS })
}

/// Regularized form: each Γ(b_j + k) denominator replaced by its
/// reciprocal-gamma value, total in the lower parameters.
pub fn pfq_regularized(upper: &[f64], lower: &[f64], x: f64) -> Result<PfqEval> {
    check_convergence_class(upper, lower, x)?;
    let mut acc = SeriesAccumulator::new(DEFAULT_TOL);
    // running Π (a_i)_k x^k / k!
    let mut numer = 1.0f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let mut term = numer;
        for &b in lower {
            term *= recip_gamma(b + kf);
        }
        if let Step::Converged = acc.push(term) {
            return Ok(PfqEval {
                value: acc.value(),
                err_est: acc.err_est(),
                terms: acc.terms,
            });
        }
        let mut ratio = x / (kf + 1.0);
        for &a in upper {
            ratio *= a + kf;
        }
        numer *= ratio;
        if numer == 0.0 {
            return Ok(PfqEval {
                value: acc.value(),
                err_est: 0.0,
                terms: acc.terms,
            });
        }
        if !numer.is_finite() {
            return Err(EvalError::Overflow);
        }
    }
    Err(EvalError::NonConvergence { terms: MAX_TERMS })
}

/// Convenience wrapper returning just the value.
pub fn pfq_value(upper: &[f64], lower: &[f64], x: f64) -> Result<f64> {
    Ok(pfq(upper, lower, x)?.value)
}
