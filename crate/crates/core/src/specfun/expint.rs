//! Exponential, sine/cosine and hyperbolic integrals.
//!
//! Ein is the primitive here: it is entire, so the roots-of-unity reduction
//! formulas can evaluate it anywhere in the complex plane without touching
//! the E₁ branch cut. The real-line functions E₁, Ei, Si, Ci, Shi, Chi come
//! out of Ein and its defining series; E₁ keeps an independent continued
//! fraction for moderate-to-large arguments, which also protects Ein itself
//! from the cancellation its alternating series suffers there.

use crate::complex::ComplexValue;
use crate::error::{EvalError, Result};
use crate::math;
use crate::specfun::gamma::EULER_GAMMA;
use crate::sum::{Kahan, SeriesAccumulator, Step};

const MAX_ITER: usize = 400;
// |z| up to which the entire series keeps enough digits (max term ~ e^12)
const SERIES_RADIUS: f64 = 12.0;

/// Ein(z) = Σ_{k≥1} (−1)^{k+1} z^k / (k·k!), entire.
pub fn ein_complex(z: ComplexValue) -> Result<ComplexValue> {
    if !z.is_finite() {
        return Err(EvalError::Domain("Ein requires a finite argument"));
    }
    if z.im == 0.0 {
        return Ok(ComplexValue::real(ein_real(z.re)?));
    }
    if z.abs() > SERIES_RADIUS {
        // alternation destroys the entire series here; recover Ein from the
        // E1 continued fraction, which converges off the negative real axis
        let e1 = e1_cf_complex(z)?;
        return Ok(e1 + ComplexValue::real(EULER_GAMMA) + z.ln());
    }
    let mut re = Kahan::new();
    let mut im = Kahan::new();
    // term_k = (-1)^{k+1} z^k/(k k!); carry p = (-1)^{k+1} z^k/k!
    let mut p = z;
    for k in 1..MAX_ITER {
        let kf = k as f64;
        re.add(p.re / kf);
        im.add(p.im / kf);
        let mag = p.abs() / kf;
        if mag <= 1e-17 * (ComplexValue::new(re.value(), im.value()).abs() + 1e-30) && k > 4 {
            break;
        }
        p = (-p * z).scale(1.0 / (kf + 1.0));
    }
    Ok(ComplexValue::new(re.value(), im.value()))
}

/// Ein on the real line, all x.
pub fn ein_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(EvalError::Domain("Ein requires a finite argument"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x > SERIES_RADIUS {
        // alternating series cancels here; E1 is tiny and stable by CF
        return Ok(e1_continued_fraction(x) + EULER_GAMMA + math::log(x));
    }
    // x < 0 gives a same-sign series, fine for any magnitude short of overflow
    let mut acc = SeriesAccumulator::new(f64::EPSILON * 0.5);
    let mut p = x; // (-1)^{k+1} x^k / k!
    for k in 1..MAX_ITER {
        if let Step::Converged = acc.push(p / k as f64) {
            break;
        }
        p *= -x / (k as f64 + 1.0);
        if !p.is_finite() {
            return Err(EvalError::Overflow);
        }
    }
    Ok(acc.value())
}

// modified Lentz on E1's continued fraction for complex z off the cut;
// convergence is fast away from the negative real axis
fn e1_cf_complex(z: ComplexValue) -> Result<ComplexValue> {
    // rescue value large enough that its squared norm stays normal inside
    // the complex division
    let tiny = ComplexValue::real(1e-150);
    let one = ComplexValue::ONE;
    let mut b = z + ComplexValue::ONE;
    let mut c = one / tiny;
    let mut d = one / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = ComplexValue::real(-((i * i) as f64));
        b = b + ComplexValue::real(2.0);
        d = an * d + b;
        if d.abs() < 1e-150 {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < 1e-150 {
            c = tiny;
        }
        d = one / d;
        let delta = d * c;
        h = h * delta;
        if (delta - one).abs() < f64::EPSILON {
            let e = (-z).exp();
            return Ok(e * h);
        }
    }
    Err(EvalError::NonConvergence { terms: MAX_ITER })
}

fn e1_continued_fraction(x: f64) -> f64 {
    // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/...))), modified Lentz
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -(i as f64) * (i as f64);
        b += 2.0;
        d = an * d + b;
        if math::fabs(d) < tiny {
            d = tiny;
        }
        c = b + an / c;
        if math::fabs(c) < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if math::fabs(delta - 1.0) < f64::EPSILON {
            break;
        }
    }
    math::exp(-x) * h
}

/// E₁(x) for x > 0 (branch cut (−∞, 0] excluded on the real API).
pub fn e1(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(EvalError::Domain("E1 requires x > 0 on the real line"));
    }
    if x >= 1.0 {
        Ok(e1_continued_fraction(x))
    } else {
        Ok(ein_real(x)? - EULER_GAMMA - math::log(x))
    }
}

/// E₁(z) on the cut plane, principal branch: Ein(z) − γ − ln z.
pub fn e1_complex(z: ComplexValue) -> Result<ComplexValue> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(EvalError::Domain("E1 is undefined on the cut (-inf, 0]"));
    }
    if z.im == 0.0 {
        return Ok(ComplexValue::real(e1(z.re)?));
    }
    Ok(ein_complex(z)? - ComplexValue::real(EULER_GAMMA) - z.ln())
}

/// Ei(x) for real x ≠ 0.
pub fn ei(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(EvalError::Domain("Ei requires finite x != 0"));
    }
    if x < 0.0 {
        return Ok(-e1(-x)?);
    }
    // Ei(x) = γ + ln x + Σ x^k/(k k!), same-sign series
    if x > 700.0 {
        return Err(EvalError::Overflow);
    }
    Ok(EULER_GAMMA + math::log(x) - ein_real(-x)?)
}

/// Shi(x) = [Ein(x) − Ein(−x)] / 2, x > 0.
pub fn shi(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(EvalError::Domain("Shi requires x > 0"));
    }
    Ok(0.5 * (ein_real(x)? - ein_real(-x)?))
}

/// Chi(x) = γ + ln x − [Ein(x) + Ein(−x)] / 2, x > 0.
pub fn chi(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(EvalError::Domain("Chi requires x > 0"));
    }
    Ok(EULER_GAMMA + math::log(x) - 0.5 * (ein_real(x)? + ein_real(-x)?))
}

/// Si(x) = Im Ein(ix), x ≥ 0.
pub fn si(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(EvalError::Domain("Si requires x >= 0"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(ein_complex(ComplexValue::new(0.0, x))?.im)
}

/// Ci(x) = γ + ln x − Re Ein(ix), x > 0.
pub fn ci(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(EvalError::Domain("Ci requires x > 0"));
    }
    Ok(EULER_GAMMA + math::log(x) - ein_complex(ComplexValue::new(0.0, x))?.re)
}
