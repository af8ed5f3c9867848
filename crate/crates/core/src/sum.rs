//! Compensated series accumulation with the shared stopping rule.
//!
//! Every series in the crate funnels through [`SeriesAccumulator`]: Kahan
//! summation, a stop rule of three consecutive terms below `tol * |sum|`
//! (or below the absolute underflow floor), and a cancellation-aware error
//! estimate. Keeping the rule in one place keeps convergence behavior and
//! error reporting identical across the eight derivative series, the base
//! functions and the hypergeometric evaluators.

use crate::math;

/// Terms smaller than this are treated as exhausted regardless of `|sum|`;
/// it protects sums whose true value is at or near zero.
const UNDERFLOW_FLOOR: f64 = 1e-305;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Kahan {
            sum: 0.0,
            comp: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, term: f64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

pub(crate) struct SeriesAccumulator {
    acc: Kahan,
    abs_sum: f64,
    last_term: f64,
    small_streak: u32,
    pub terms: usize,
    tol: f64,
}

pub(crate) enum Step {
    Continue,
    Converged,
}

impl SeriesAccumulator {
    pub fn new(tol: f64) -> Self {
        SeriesAccumulator {
            acc: Kahan::new(),
            abs_sum: 0.0,
            last_term: f64::INFINITY,
            small_streak: 0,
            terms: 0,
            tol,
        }
    }

    pub fn push(&mut self, term: f64) -> Step {
        self.acc.add(term);
        let mag = math::fabs(term);
        self.abs_sum += mag;
        self.last_term = mag;
        self.terms += 1;
        let small = mag <= self.tol * math::fabs(self.acc.value()) || mag <= UNDERFLOW_FLOOR;
        if small {
            self.small_streak += 1;
        } else {
            self.small_streak = 0;
        }
        if self.small_streak >= 3 {
            Step::Converged
        } else {
            Step::Continue
        }
    }

    pub fn value(&self) -> f64 {
        self.acc.value()
    }

    /// Last-term magnitude, widened by the roundoff floor of the summed
    /// magnitudes so that cancellation-heavy sums report an honest bound.
    pub fn err_est(&self) -> f64 {
        let roundoff = f64::EPSILON * self.abs_sum;
        if self.last_term.is_finite() {
            self.last_term.max(roundoff)
        } else {
            roundoff
        }
    }
}
