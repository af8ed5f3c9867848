//! Exponential polynomial, Pochhammer symbol, error function.

use crate::error::Result;
use crate::math;
use crate::specfun::incgamma;
use crate::sum::{SeriesAccumulator, Step};

/// e_k(x) = Σ_{n=0..k} xⁿ/n!, the degree-k truncation of the exponential.
pub fn exp_polynomial(k: u32, x: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for n in 1..=k {
        term *= x / n as f64;
        sum += term;
    }
    sum
}

/// Rising factorial (a)_k = a (a+1) ⋯ (a+k−1).
pub fn pochhammer(a: f64, k: u32) -> f64 {
    let mut p = 1.0;
    for j in 0..k {
        p *= a + j as f64;
    }
    p
}

const SQRT_PI: f64 = 1.772_453_850_905_516;

/// erf(x): Maclaurin series for small arguments, incomplete-gamma route
/// (series/continued fraction) beyond.
pub fn erf(x: f64) -> Result<f64> {
    let ax = math::fabs(x);
    let sign = if x < 0.0 { -1.0 } else { 1.0 };
    if ax == 0.0 {
        return Ok(0.0);
    }
    if ax <= 1.0 {
        // 2/√π Σ (−1)^k x^{2k+1}/(k!(2k+1))
        let mut acc = SeriesAccumulator::new(f64::EPSILON * 0.5);
        let mut p = ax; // (−1)^k x^{2k+1}/k!
        let x2 = ax * ax;
        for k in 0..60 {
            let kf = k as f64;
            if let Step::Converged = acc.push(p / (2.0 * kf + 1.0)) {
                break;
            }
            p *= -x2 / (kf + 1.0);
        }
        return Ok(sign * 2.0 / SQRT_PI * acc.value());
    }
    // erf(x) = P(1/2, x²) for x > 0
    Ok(sign * incgamma::lower_regularized(0.5, ax * ax)?)
}
