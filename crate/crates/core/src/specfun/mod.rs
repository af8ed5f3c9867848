//! Classical special functions backing the Mittag-Leffler/Wright machinery.
//!
//! Everything is self-contained on top of elementary functions; no external
//! math library. All operations are pure and reentrant, and summation order
//! is fixed per call, so results are bit-identical under concurrency.

pub mod bessel;
pub mod elem;
pub mod expint;
pub mod gamma;
pub mod hyper;
pub mod incgamma;

/// Shared mathematical constants.
pub mod consts {
    /// Euler–Mascheroni constant γ = −ψ(1).
    pub const EULER_GAMMA: f64 = super::gamma::EULER_GAMMA;
    pub const PI: f64 = core::f64::consts::PI;
}

pub use bessel::{bessel_i, bessel_k, bessel_modified};
pub use elem::{erf, exp_polynomial, pochhammer};
pub use expint::{chi, ci, e1, e1_complex, ei, ein_complex, ein_real, shi, si};
pub use gamma::{digamma, digamma_over_gamma, gamma, ln_gamma, recip_gamma, EULER_GAMMA};
pub use hyper::{pfq, pfq_regularized, pfq_value, PfqEval};
pub use incgamma::{gamma_star, incomplete_gamma, lower_gamma, upper_gamma};
