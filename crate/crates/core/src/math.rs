//! Thin wrappers around `libm` so the crate builds without `std`.
//!
//! Routing every transcendental through one module also keeps results
//! bit-identical across platforms, which the validation suites rely on.

pub(crate) use libm::{cos, cosh, exp, fabs, floor, log, pow, sin, sinh, sqrt};

/// Natural log of 2π, used by the Stirling/Lanczos log forms.
pub(crate) const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

#[inline]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    let mut r = 1.0;
    let mut b = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    r
}

/// sin(πx) with argument reduction done on x itself, so it stays accurate
/// near integers (where the naive `sin(PI * x)` loses all digits).
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * floor(0.5 * x); // r in [0, 2)
    if r < 0.25 {
        sin(core::f64::consts::PI * r)
    } else if r < 0.75 {
        cos(core::f64::consts::PI * (r - 0.5))
    } else if r < 1.25 {
        -sin(core::f64::consts::PI * (r - 1.0))
    } else if r < 1.75 {
        -cos(core::f64::consts::PI * (r - 1.5))
    } else {
        sin(core::f64::consts::PI * (r - 2.0))
    }
}

/// cos(πx), same reduction strategy as [`sin_pi`].
pub(crate) fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}
