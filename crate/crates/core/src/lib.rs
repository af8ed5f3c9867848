//! Mittag-Leffler and Wright functions, their integral variants, and all
//! eight first derivatives with respect to the parameters α and β.
//!
//! Three independent evaluation routes are provided and cross-validated:
//! direct series summation, closed-form reductions at special parameter
//! values, and numerical oracles (quadrature, finite differences,
//! double-double summation). The crate is `no_std` (alloc only); IO, the
//! CLI and file formats live in the companion `mlwright-cli` crate.
//!
//! ```
//! use mlwright::series::{eval_family, EvalOptions, Family, Params};
//!
//! let p = Params::new(Family::MittagLeffler, 1.0, 1.0).unwrap();
//! let e = eval_family(&p, 2.0, &EvalOptions::default()).unwrap();
//! assert!((e.value - 2.0_f64.exp()).abs() < 1e-12);
//! ```

#![cfg_attr(not(test), no_std)]
// full-precision node/weight/fixture literals, kept verbatim
#![allow(clippy::excessive_precision)]
// `!(x > 0.0)` deliberately rejects NaN along with the out-of-domain sign
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod complex;
pub mod dd;
pub mod deriv;
pub mod error;
pub mod fdiff;
pub mod quad;
pub mod reduction;
pub mod series;
pub mod specfun;
pub mod validate;

mod math;
mod sum;

pub use complex::ComplexValue;
pub use deriv::{param_derivative, DerivTarget, Wrt};
pub use error::{EvalError, Result};
pub use series::{
    eval_family, eval_integral_ml, eval_integral_wright, eval_mittag_leffler, eval_wright,
    EvalOptions, Evaluation, Family, Method, MethodPolicy, Params,
};
pub use validate::{run_suite, CheckResult, SuiteName, ValidationReport};

/// Discrepancy record for the Wright interrelation
/// ∂Wi/∂α = ψ(β)/Γ(β) + ∂W/∂β at one in-domain point.
pub fn deriv_interrelation_check(alpha: f64, beta: f64, x: f64) -> Result<CheckResult> {
    use alloc::format;
    let (lhs, rhs) = deriv::deriv_interrelation_sides(alpha, beta, x, &EvalOptions::default())?;
    Ok(CheckResult::new(
        format!("wright-interrelation/a={alpha}/b={beta}/x={x}"),
        "dWi/dalpha = psi(b)/Gamma(b) + dW/dbeta (quotient pole-safe)",
        lhs,
        rhs,
        1e-10,
    ))
}
