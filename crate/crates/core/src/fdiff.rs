//! Richardson-extrapolated central differences for first derivatives.

use crate::error::Result;
use crate::math;

/// d/dx f at `x0`, central scheme over a shrinking step ladder with a
/// Richardson tableau. Returns (value, error estimate).
pub fn central_diff<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    x0: f64,
    h0: f64,
) -> Result<(f64, f64)> {
    const LEVELS: usize = 4;
    let mut tableau = [[0.0f64; LEVELS]; LEVELS];
    let mut h = h0;
    for i in 0..LEVELS {
        let fp = f(x0 + h)?;
        let fm = f(x0 - h)?;
        tableau[i][0] = (fp - fm) / (2.0 * h);
        let mut pow4 = 1.0;
        for j in 1..=i {
            pow4 *= 4.0;
            tableau[i][j] = (pow4 * tableau[i][j - 1] - tableau[i - 1][j - 1]) / (pow4 - 1.0);
        }
        h *= 0.5;
    }
    let best = tableau[LEVELS - 1][LEVELS - 1];
    let err = math::fabs(best - tableau[LEVELS - 2][LEVELS - 2]);
    Ok((best, err))
}

/// Default step for the derivative checks in this crate.
pub fn default_step(x0: f64) -> f64 {
    1e-5 * (1.0 + math::fabs(x0)).clamp(1.0, 100.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::{digamma, gamma, EULER_GAMMA};

    #[test]
    fn identity_function() {
        let (d, _) = central_diff(Ok, 3.7, 1e-3).unwrap();
        assert!((d - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gamma_prime_at_one() {
        // Γ'(1) = Γ(1) ψ(1) = −γ
        let (d, e) = central_diff(gamma, 1.0, 1e-3).unwrap();
        assert!((d + EULER_GAMMA).abs() < 1e-10, "d={d} e={e}");
    }

    #[test]
    fn digamma_prime_is_trigamma_at_one() {
        // ψ'(1) = π²/6
        let (d, _) = central_diff(digamma, 1.0, 1e-3).unwrap();
        let want = core::f64::consts::PI * core::f64::consts::PI / 6.0;
        assert!(((d - want) / want).abs() < 1e-9);
    }
}
