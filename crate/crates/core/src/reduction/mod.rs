//! Closed-form reduction machinery for the parameter derivatives.
//!
//! The Q, S and P building blocks plus the general reduction operations:
//! integer α via roots of unity and the entire exponential integral,
//! reciprocal α = 1/q via Q and P, and the α = 1 Wright case via Bessel and
//! hypergeometric combinations. Every operation here is cross-checked
//! against the direct series in the validation suites; none of them is an
//! oracle for itself.

pub mod registry;

use crate::complex::ComplexValue;
use crate::error::{EvalError, Result};
use crate::fdiff::central_diff;
use crate::math;
use crate::series::{Evaluation, Method};
use crate::specfun::bessel::bessel_i;
use crate::specfun::expint::ein_complex;
use crate::specfun::gamma::{
    digamma, digamma_over_gamma, gamma, is_nonpositive_integer, EULER_GAMMA,
};
use crate::specfun::hyper::pfq;
use crate::specfun::incgamma::gamma_star;

pub use registry::{
    closed_form_registry_eval, registry_entries, registry_lookup, BetaPattern, ClosedFormEntry,
    Rational, XDomain,
};

// value plus a magnitude budget (sum of |additive pieces|) used for
// cancellation-aware error estimates
pub(crate) type ValMag = (f64, f64);

fn wrap(value_mag: ValMag, terms: usize) -> Evaluation {
    Evaluation {
        value: value_mag.0,
        abs_err_est: f64::EPSILON * value_mag.1,
        terms_used: terms,
        method: Method::ClosedForm,
    }
}

/// Q(a, x) = Σ_{k≥1} ψ(k+a) x^k/(a)_k
///         = e^x [x^{1−a} ψ(a) γ(a, x) + (x/a²) ₂F₂(a, a; a+1, a+1; −x)].
///
/// The x^{1−a} γ(a, x) factor is carried as x Γ(a) γ*(a, x), which stays
/// analytic for negative non-integer `a` where the lower incomplete gamma
/// integral itself diverges.
pub fn q_function(a: f64, x: f64) -> Result<f64> {
    Ok(q_function_parts(a, x)?.0)
}

pub(crate) fn q_function_parts(a: f64, x: f64) -> Result<ValMag> {
    if is_nonpositive_integer(a) {
        return Err(EvalError::Pole { arg: a });
    }
    if !x.is_finite() {
        return Err(EvalError::Domain("q_function requires finite x"));
    }
    if x == 0.0 {
        return Ok((0.0, 0.0));
    }
    let ex = math::exp(x);
    let t1 = ex * x * gamma(a)? * gamma_star(a, x)? * digamma(a)?;
    let f = pfq(&[a, a], &[a + 1.0, a + 1.0], -x)?;
    let t2 = ex * x / (a * a) * f.value;
    Ok((t1 + t2, math::fabs(t1) + math::fabs(t2)))
}

/// S(a, x) = Σ_{k≥0} x^{k+1}/((k+a)(a)_{k+1}) = (x/a²) ₂F₂(1, a; 1+a, 1+a; x).
pub fn s_cap_function(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(EvalError::Domain("s_cap_function requires a > 0"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(x / (a * a) * pfq(&[1.0, a], &[1.0 + a, 1.0 + a], x)?.value)
}

/// P(a, x) = ∂Q(a, x)/∂x
///         = ψ(a) + e^x [ (x−a+1)/a² ₂F₂(a, a; a+1, a+1; −x)
///                        + x^{−a} γ(a, x) ((x−a+1) ψ(a) + 1) ].
///
/// Guarded: the closed form is compared against a Richardson derivative of
/// Q on every call and reports a discrepancy error instead of returning a
/// wrong value.
pub fn p_function(a: f64, x: f64) -> Result<f64> {
    let v = p_closed_form(a, x)?;
    // guard point: x itself when the difference stencil stays in x > 0,
    // else a nearby point that does
    let h = (0.05 * (1.0 + math::fabs(x))).min(0.25);
    let xc = if x >= 1.5 * h { x } else { 1.5 * h };
    let (dq, _) = central_diff(|t| q_function(a, t), xc, h)?;
    let reference = if xc == x { v } else { p_closed_form(a, xc)? };
    if math::fabs(reference - dq) / (1.0 + math::fabs(dq)) > 1e-6 {
        return Err(EvalError::FormulaDiscrepancy {
            got: reference,
            expected: dq,
        });
    }
    Ok(v)
}

fn p_closed_form(a: f64, x: f64) -> Result<f64> {
    if is_nonpositive_integer(a) {
        return Err(EvalError::Pole { arg: a });
    }
    let psi = digamma(a)?;
    if !x.is_finite() {
        return Err(EvalError::Domain("p_function requires finite x"));
    }
    if x == 0.0 {
        return Ok(psi);
    }
    let w = x - a + 1.0;
    let f = pfq(&[a, a], &[a + 1.0, a + 1.0], -x)?.value;
    // x^{−a} γ(a, x) = Γ(a) γ*(a, x)
    let g = gamma(a)? * gamma_star(a, x)?;
    Ok(psi + math::exp(x) * (w / (a * a) * f + g * (w * psi + 1.0)))
}

/// Θ_{n,m}(s): 1 iff (s + m) mod n = 0.
///
/// The equivalent roots-of-unity average (1/n) Σ_t exp(2πi t (s+m)/n) is
/// exercised in tests; the arithmetic form is the production path.
pub fn theta_selector(n: u32, m: u32, s: u32) -> u8 {
    debug_assert!(n >= 1 && m < n);
    u8::from((s + m) % n == 0)
}

/// Roots-of-unity average form of the selector, for cross-checking.
pub fn theta_selector_unity_average(n: u32, m: u32, s: u32) -> f64 {
    let mut acc = ComplexValue::ZERO;
    for t in 0..n {
        let phase = 2.0 * core::f64::consts::PI * (t as f64) * ((s + m) as f64) / (n as f64);
        acc = acc + ComplexValue::cis(phase);
    }
    acc.re / n as f64
}

/// The n-th root-of-unity point ξ = exp(2πit/n) x^{1/n} used by the
/// integer-α reduction.
#[derive(Debug, Clone, Copy)]
pub struct UnityRootContext {
    pub n: u32,
    pub t: u32,
    pub xi: ComplexValue,
}

impl UnityRootContext {
    pub fn new(n: u32, t: u32, x: f64) -> Result<Self> {
        if n == 0 || t >= n {
            return Err(EvalError::Domain("unity root requires n >= 1, t < n"));
        }
        if !(x > 0.0) {
            return Err(EvalError::Domain("unity root requires x > 0"));
        }
        let r = math::pow(x, 1.0 / n as f64);
        let phase = 2.0 * core::f64::consts::PI * t as f64 / n as f64;
        Ok(UnityRootContext {
            n,
            t,
            xi: ComplexValue::cis(phase).scale(r),
        })
    }
}

const IMAG_RESIDUE_TOL: f64 = 1e-9;

/// ∂Ei/∂α at α = n, β = −m (0 ≤ m < n), x > 0:
///
///   −(x^{(m+1)/n}/n) Σ_t exp(2πit(m+1)/n) e^ξ [E₁(ξ) + ln ξ]
///
/// with e^ξ [E₁(ξ) + ln ξ] realized as e^ξ [Ein(ξ) − γ] so that no branch
/// cut is crossed. The imaginary residue must vanish to tolerance.
pub fn dei_dalpha_integer_alpha(n: u32, m: u32, x: f64) -> Result<Evaluation> {
    Ok(dei_dalpha_integer_alpha_with_residue(n, m, x)?.0)
}

/// Same as [`dei_dalpha_integer_alpha`] but also returns the imaginary residue
/// before projection, for the reality checks.
pub fn dei_dalpha_integer_alpha_with_residue(n: u32, m: u32, x: f64) -> Result<(Evaluation, f64)> {
    if n == 0 || m >= n {
        return Err(EvalError::Domain("requires n >= 1 and 0 <= m < n"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let mut sum = ComplexValue::ZERO;
    let mut mag = 0.0f64;
    for t in 0..n {
        let ctx = UnityRootContext::new(n, t, x)?;
        let phase = 2.0 * core::f64::consts::PI * (t as f64) * ((m + 1) as f64) / (n as f64);
        let ein = ein_complex(ctx.xi)?;
        let piece =
            ComplexValue::cis(phase) * ctx.xi.exp() * (ein - ComplexValue::real(EULER_GAMMA));
        sum = sum + piece;
        mag += piece.abs();
    }
    let pref = math::pow(x, (m + 1) as f64 / n as f64) / n as f64;
    let re = -pref * sum.re;
    let im = -pref * sum.im;
    if math::fabs(im) > IMAG_RESIDUE_TOL * (1.0 + math::fabs(re)) {
        return Err(EvalError::ImaginaryResidue { re, im });
    }
    Ok((wrap((re, pref * mag), n as usize), im))
}

/// ∂Ei/∂α at α = 1/q, arbitrary β (Q-based reduction):
///   −Σ_{h<q} x^{−h}/Γ(β − h/q) · Q(β − h/q, x^q).
pub fn dei_dalpha_reciprocal_alpha(q: u32, beta: f64, x: f64) -> Result<Evaluation> {
    if q == 0 {
        return Err(EvalError::Domain("requires q >= 1"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let xq = math::powi(x, q as i32);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for h in 0..q {
        let a = beta - h as f64 / q as f64;
        let (qv, qm) = q_function_parts(a, xq)?;
        let w = math::pow(x, -(h as f64)) / gamma(a)?;
        sum += w * qv;
        mag += math::fabs(w) * qm;
    }
    Ok(wrap((-sum, mag), q as usize))
}

/// ∂Ei/∂β at α = 1/q, β = 0:
///   (1/q) Σ_{h<q} x^{−h}/Γ(1 − h/q) · [S(1 − h/q, x^q) − Q(1 − h/q, x^q)].
pub fn dei_dbeta_reciprocal_alpha(q: u32, x: f64) -> Result<Evaluation> {
    if q == 0 {
        return Err(EvalError::Domain("requires q >= 1"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let xq = math::powi(x, q as i32);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for h in 0..q {
        let a = 1.0 - h as f64 / q as f64;
        let s = s_cap_function(a, xq)?;
        let (qv, qm) = q_function_parts(a, xq)?;
        let w = math::pow(x, -(h as f64)) / gamma(a)?;
        sum += w * (s - qv);
        mag += math::fabs(w) * (math::fabs(s) + qm);
    }
    let q_inv = 1.0 / q as f64;
    Ok(wrap((q_inv * sum, q_inv * mag), q as usize))
}

/// ∂Wi/∂α at α = 1, β ∉ ℤ:
///
///   ψ(β)/Γ(β)
///   − x^{(1−β)/2} I_{β−1}(2√x) [ψ(β) + x/(β(β−1)) ₃F₄(1,1,3/2; 2,2,2−β,1+β; 4x)]
///   − Γ(1−β)/(β Γ(1+β)) x^{(1+β)/2} I_{1−β}(2√x) ₂F₃(β,β+1/2; 2β,1+β,1+β; 4x).
pub fn dwi_dalpha_alpha_one(beta: f64, x: f64) -> Result<Evaluation> {
    if beta == math::floor(beta) {
        return Err(EvalError::Domain("requires non-integer beta"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let sx = math::sqrt(x);
    let psi_b = digamma(beta)?;
    let t1 = digamma_over_gamma(beta);
    let f34 = pfq(
        &[1.0, 1.0, 1.5],
        &[2.0, 2.0, 2.0 - beta, 1.0 + beta],
        4.0 * x,
    )?
    .value;
    let t2 = math::pow(x, (1.0 - beta) / 2.0)
        * bessel_i(beta - 1.0, 2.0 * sx)?
        * (psi_b + x / (beta * (beta - 1.0)) * f34);
    let f23 = pfq(
        &[beta, beta + 0.5],
        &[2.0 * beta, 1.0 + beta, 1.0 + beta],
        4.0 * x,
    )?
    .value;
    let t3 = gamma(1.0 - beta)? / (beta * gamma(1.0 + beta)?)
        * math::pow(x, (1.0 + beta) / 2.0)
        * bessel_i(1.0 - beta, 2.0 * sx)?
        * f23;
    let value = t1 - t2 - t3;
    let mag = math::fabs(t1) + math::fabs(t2) + math::fabs(t3);
    Ok(wrap((value, mag), 0))
}

/// ∂E/∂β at α = 1/q, arbitrary β:
///   −Σ_{h<q} x^h/Γ(h/q + β) · [ψ(h/q + β) + Q(h/q + β, x^q)].
pub fn de_dbeta_reciprocal_alpha(q: u32, beta: f64, x: f64) -> Result<Evaluation> {
    if q == 0 {
        return Err(EvalError::Domain("requires q >= 1"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let xq = math::powi(x, q as i32);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for h in 0..q {
        let a = h as f64 / q as f64 + beta;
        let (qv, qm) = q_function_parts(a, xq)?;
        let w = math::powi(x, h as i32) / gamma(a)?;
        let psi = digamma(a)?;
        sum += w * (psi + qv);
        mag += math::fabs(w) * (math::fabs(psi) + qm);
    }
    Ok(wrap((-sum, mag), q as usize))
}

/// ∂E/∂α at α = 1/q, arbitrary β:
///   −Σ_{h<q} x^h/Γ(h/q + β) · { h [ψ(h/q+β) + Q(h/q+β, x^q)]
///                               + q x^q P(h/q+β, x^q) }.
pub fn de_dalpha_reciprocal_alpha(q: u32, beta: f64, x: f64) -> Result<Evaluation> {
    if q == 0 {
        return Err(EvalError::Domain("requires q >= 1"));
    }
    if !(x > 0.0) {
        return Err(EvalError::Domain("requires x > 0"));
    }
    let xq = math::powi(x, q as i32);
    let mut sum = 0.0;
    let mut mag = 0.0;
    for h in 0..q {
        let a = h as f64 / q as f64 + beta;
        let (qv, qm) = q_function_parts(a, xq)?;
        let p = p_function(a, xq)?;
        let w = math::powi(x, h as i32) / gamma(a)?;
        let hf = h as f64;
        let piece = hf * (digamma(a)? + qv) + q as f64 * xq * p;
        sum += w * piece;
        mag += math::fabs(w) * (hf * qm + math::fabs(q as f64 * xq * p));
    }
    Ok(wrap((-sum, mag), q as usize))
}
