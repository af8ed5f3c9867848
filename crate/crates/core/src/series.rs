//! Direct series evaluation of the four base functions: Mittag-Leffler
//! E_{α,β}, Wright W_{α,β}, and their integral variants Ei_{α,β}, Wi_{α,β}.
//!
//! Terms are assembled in log space from ln Γ with explicit sign tracking,
//! so αk + β may sweep through negative non-pole reals and |x|^k cannot
//! overflow before the gamma decay catches up. Terms sitting exactly on a
//! gamma pole contribute zero (reciprocal-gamma convention).

use crate::error::{EvalError, Result};
use crate::math;
use crate::quad::quadrature;
use crate::specfun::gamma::{
    digamma, is_nonpositive_integer, ln_gamma_pos, ln_gamma_sign, recip_gamma,
};
use crate::sum::{SeriesAccumulator, Step};

/// The four function families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    MittagLeffler,
    Wright,
    IntegralMl,
    IntegralWright,
}

impl Family {
    pub fn is_integral(self) -> bool {
        matches!(self, Family::IntegralMl | Family::IntegralWright)
    }

    pub fn is_wright(self) -> bool {
        matches!(self, Family::Wright | Family::IntegralWright)
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::MittagLeffler => "E",
            Family::Wright => "W",
            Family::IntegralMl => "Ei",
            Family::IntegralWright => "Wi",
        }
    }
}

/// Parameter pair (α, β) bound to a family, with the family's domain rules
/// enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    alpha: f64,
    beta: f64,
    family: Family,
}

impl Params {
    pub fn new(family: Family, alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(EvalError::Domain("alpha and beta must be finite"));
        }
        match family {
            Family::MittagLeffler | Family::IntegralMl => {
                if alpha < 0.0 {
                    return Err(EvalError::Domain(
                        "Mittag-Leffler families require alpha >= 0",
                    ));
                }
                if alpha == 0.0 && beta == 0.0 {
                    return Err(EvalError::Domain("alpha = beta = 0 is excluded"));
                }
            }
            Family::Wright | Family::IntegralWright => {
                if alpha <= -1.0 {
                    return Err(EvalError::Domain("Wright families require alpha > -1"));
                }
            }
        }
        Ok(Params {
            alpha,
            beta,
            family,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// α = 0 restricts the Mittag-Leffler families to |x| < 1.
    pub fn check_x(&self, x: f64) -> Result<()> {
        if !x.is_finite() {
            return Err(EvalError::Domain("x must be finite"));
        }
        if self.alpha == 0.0 && !self.family.is_wright() && math::fabs(x) >= 1.0 {
            return Err(EvalError::Domain("alpha = 0 requires |x| < 1"));
        }
        Ok(())
    }
}

/// Method selection for an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodPolicy {
    #[default]
    Auto,
    Series,
    ClosedForm,
    Quadrature,
}

/// Which route actually produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Method {
    Series,
    ClosedForm,
    Quadrature,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
        }
    }
}

/// Tolerance / term-cap / method policy for any summation.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    pub tol: f64,
    pub max_terms: usize,
    pub method: MethodPolicy,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: 1e-15,
            max_terms: 10_000,
            method: MethodPolicy::Auto,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(EvalError::Domain("tol must lie in (0, 1)"));
        }
        if self.max_terms < 8 {
            return Err(EvalError::Domain("max_terms must be at least 8"));
        }
        Ok(())
    }
}

/// A computed value with its error estimate, term count and method tag.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Evaluation {
    pub value: f64,
    pub abs_err_est: f64,
    pub terms_used: usize,
    pub method: Method,
}

// ---------------------------------------------------------------------------
// shared series kernel
// ---------------------------------------------------------------------------

/// k-weight of one series: k^{k_power} (k_power ∈ {−1, 0, 1}), optionally
/// divided by k!.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Weight {
    pub k_power: i32,
    pub inv_factorial: bool,
    pub start_k: usize,
}

/// Series coefficient kind: 1/Γ(αk+β) for the base functions,
/// ψ(αk+β)/Γ(αk+β) for the parameter derivatives.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Coeff {
    RecipGamma,
    DigammaOverGamma,
}

/// ln |coeff(z)| and sign, or None for a structural zero.
fn coeff_log(coeff: Coeff, z: f64) -> Option<(f64, f64)> {
    match coeff {
        Coeff::RecipGamma => {
            if is_nonpositive_integer(z) {
                None
            } else {
                let (lg, sg) = ln_gamma_sign(z);
                Some((-lg, sg))
            }
        }
        Coeff::DigammaOverGamma => {
            if is_nonpositive_integer(z) {
                // limit (−1)^{m+1} m!
                let m = -z;
                let sign = if (m as u64) % 2 == 0 { -1.0 } else { 1.0 };
                Some((ln_gamma_pos(m + 1.0), sign))
            } else {
                let psi = digamma(z).ok()?;
                if psi == 0.0 {
                    return None;
                }
                let (lg, sg) = ln_gamma_sign(z);
                Some((
                    math::log(math::fabs(psi)) - lg,
                    sg * if psi < 0.0 { -1.0 } else { 1.0 },
                ))
            }
        }
    }
}

/// Σ_{k≥start} weight(k) · coeff(αk+β) · x^k, in log space with Kahan
/// accumulation. `sign` multiplies the whole sum.
pub(crate) fn sum_family_series(
    alpha: f64,
    beta: f64,
    x: f64,
    weight: Weight,
    coeff: Coeff,
    sign: f64,
    opts: &EvalOptions,
) -> Result<Evaluation> {
    opts.validate()?;
    if x == 0.0 {
        // only a k = 0 term can survive
        let value = if weight.start_k == 0 {
            match coeff_log(coeff, beta) {
                Some((lc, sc)) => sc * math::exp(lc),
                None => 0.0,
            }
        } else {
            0.0
        };
        return Ok(Evaluation {
            value: sign * value,
            abs_err_est: 0.0,
            terms_used: if weight.start_k == 0 { 1 } else { 0 },
            method: Method::Series,
        });
    }
    // α = 0 with a structurally zero coefficient: the whole series vanishes
    if alpha == 0.0 && coeff_log(coeff, beta).is_none() {
        return Ok(Evaluation {
            value: 0.0,
            abs_err_est: 0.0,
            terms_used: 0,
            method: Method::Series,
        });
    }

    let ln_ax = math::log(math::fabs(x));
    let neg_x = x < 0.0;
    let mut acc = SeriesAccumulator::new(opts.tol);
    let mut converged = false;
    for k in weight.start_k..weight.start_k + opts.max_terms {
        let kf = k as f64;
        let z = alpha * kf + beta;
        let term = match coeff_log(coeff, z) {
            None => continue, // gamma-pole zero or digamma zero: contributes nothing
            Some((lc, sc)) => {
                let mut ln_t = kf * ln_ax + lc;
                if weight.inv_factorial {
                    ln_t -= ln_gamma_pos(kf + 1.0);
                }
                match weight.k_power {
                    1 => ln_t += math::log(kf),
                    -1 => ln_t -= math::log(kf),
                    _ => {}
                }
                if ln_t > 709.0 {
                    return Err(EvalError::Overflow);
                }
                let s = if neg_x && k % 2 == 1 { -sc } else { sc };
                s * math::exp(ln_t)
            }
        };
        if let Step::Converged = acc.push(term) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(EvalError::NonConvergence {
            terms: opts.max_terms,
        });
    }
    Ok(Evaluation {
        value: sign * acc.value(),
        abs_err_est: acc.err_est(),
        terms_used: acc.terms,
        method: Method::Series,
    })
}

fn base_weight(family: Family) -> Weight {
    match family {
        Family::MittagLeffler => Weight {
            k_power: 0,
            inv_factorial: false,
            start_k: 0,
        },
        Family::Wright => Weight {
            k_power: 0,
            inv_factorial: true,
            start_k: 0,
        },
        Family::IntegralMl => Weight {
            k_power: -1,
            inv_factorial: false,
            start_k: 1,
        },
        Family::IntegralWright => Weight {
            k_power: -1,
            inv_factorial: true,
            start_k: 1,
        },
    }
}

fn eval_series(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    sum_family_series(
        p.alpha,
        p.beta,
        x,
        base_weight(p.family),
        Coeff::RecipGamma,
        1.0,
        opts,
    )
}

// integral families by quadrature of (F(t) − 1/Γ(β))/t with a series patch
// below |t| = 1e-4 where the integrand is analytic but delicate
fn eval_integral_quadrature(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    let patch = 1e-4_f64;
    let base = Params::new(
        match p.family {
            Family::IntegralMl => Family::MittagLeffler,
            Family::IntegralWright => Family::Wright,
            _ => {
                return Err(EvalError::Domain(
                    "quadrature method applies to integral families",
                ))
            }
        },
        p.alpha,
        p.beta,
    )?;
    let series_opts = EvalOptions {
        method: MethodPolicy::Series,
        ..*opts
    };
    if math::fabs(x) <= patch {
        let mut e = eval_series(p, x, &series_opts)?;
        e.method = Method::Quadrature;
        return Ok(e);
    }
    let delta = if x > 0.0 { patch } else { -patch };
    let head = eval_series(p, delta, &series_opts)?;
    let rg_beta = recip_gamma(p.beta);
    let (tail, qerr) = quadrature(
        |t| Ok((eval_series(&base, t, &series_opts)?.value - rg_beta) / t),
        delta,
        x,
        1e-12,
    )?;
    Ok(Evaluation {
        value: head.value + tail,
        abs_err_est: head.abs_err_est + qerr,
        terms_used: head.terms_used,
        method: Method::Quadrature,
    })
}

/// Evaluate any base family under the option's method policy.
pub fn eval_family(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    opts.validate()?;
    p.check_x(x)?;
    match opts.method {
        MethodPolicy::Auto | MethodPolicy::Series => eval_series(p, x, opts),
        MethodPolicy::Quadrature => {
            if p.family.is_integral() {
                eval_integral_quadrature(p, x, opts)
            } else {
                Err(EvalError::Domain(
                    "quadrature method applies to integral families",
                ))
            }
        }
        MethodPolicy::ClosedForm => {
            Err(EvalError::Domain("no closed-form route for base functions"))
        }
    }
}

pub fn eval_mittag_leffler(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    expect_family(p, Family::MittagLeffler)?;
    eval_family(p, x, opts)
}

pub fn eval_wright(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    expect_family(p, Family::Wright)?;
    eval_family(p, x, opts)
}

pub fn eval_integral_ml(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    expect_family(p, Family::IntegralMl)?;
    eval_family(p, x, opts)
}

pub fn eval_integral_wright(p: &Params, x: f64, opts: &EvalOptions) -> Result<Evaluation> {
    expect_family(p, Family::IntegralWright)?;
    eval_family(p, x, opts)
}

fn expect_family(p: &Params, want: Family) -> Result<()> {
    if p.family == want {
        Ok(())
    } else {
        Err(EvalError::Domain(
            "params constructed for a different family",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    fn p(f: Family, a: f64, b: f64) -> Params {
        Params::new(f, a, b).unwrap()
    }

    #[test]
    fn ml_exponential_and_cosh() {
        let e = eval_mittag_leffler(&p(Family::MittagLeffler, 1.0, 1.0), 2.0, &opts()).unwrap();
        assert!((e.value - math::exp(2.0)).abs() < 1e-13);
        let c = eval_mittag_leffler(&p(Family::MittagLeffler, 2.0, 1.0), 4.0, &opts()).unwrap();
        assert!((c.value - math::cosh(2.0)).abs() < 1e-13);
    }

    #[test]
    fn ml_fixtures() {
        let e = eval_mittag_leffler(&p(Family::MittagLeffler, 0.7, 1.3), 1.5, &opts()).unwrap();
        assert!(((e.value - 6.759_384_121_429_091_2) / e.value).abs() < 1e-13);
        let n = eval_mittag_leffler(&p(Family::MittagLeffler, 0.7, 1.3), -2.0, &opts()).unwrap();
        assert!(((n.value - 0.320_565_949_245_213_59) / n.value).abs() < 1e-12);
    }

    #[test]
    fn wright_fixtures() {
        let w = eval_wright(&p(Family::Wright, 0.0, 1.0), 1.0, &opts()).unwrap();
        assert!((w.value - math::exp(1.0)).abs() < 1e-13);
        let b = eval_wright(&p(Family::Wright, 1.0, 1.0), 1.0, &opts()).unwrap();
        assert!((b.value - 2.279_585_302_336_067_3).abs() < 1e-13);
        let neg = eval_wright(&p(Family::Wright, -0.5, 1.0), -1.0, &opts()).unwrap();
        assert!(((neg.value - 0.479_500_122_186_953_46) / neg.value).abs() < 1e-12);
    }

    #[test]
    fn pole_beta_stays_finite() {
        // k = 0..2 coefficients sit exactly on gamma poles and drop out
        let e = eval_mittag_leffler(&p(Family::MittagLeffler, 2.0, -1.0), 1.7, &opts()).unwrap();
        assert!(((e.value - 3.361_667_357_433_855_5) / e.value).abs() < 1e-13);
        let w = eval_wright(&p(Family::Wright, 1.0, -2.0), 1.1, &opts()).unwrap();
        assert!(((w.value - 0.289_974_604_529_048_63) / w.value).abs() < 1e-12);
    }

    #[test]
    fn integral_families() {
        let z = eval_integral_ml(&p(Family::IntegralMl, 1.0, 1.0), 0.0, &opts()).unwrap();
        assert_eq!(z.value, 0.0);
        // α = 0: Σ x^k/k = −ln(1−x)
        let l = eval_integral_ml(&p(Family::IntegralMl, 0.0, 1.0), 0.5, &opts()).unwrap();
        assert!((l.value - math::log(2.0)).abs() < 1e-14);
        let i = eval_integral_ml(&p(Family::IntegralMl, 1.0, 1.0), 1.0, &opts()).unwrap();
        assert!((i.value - 1.317_902_151_454_403_9).abs() < 1e-13);
        let wi = eval_integral_wright(&p(Family::IntegralWright, 0.0, 1.0), 1.0, &opts()).unwrap();
        assert!((wi.value - 1.317_902_151_454_403_9).abs() < 1e-13);
        let w2 = eval_integral_wright(&p(Family::IntegralWright, 1.0, 2.0), 2.0, &opts()).unwrap();
        assert!((w2.value - 1.186_651_179_809_622_6).abs() < 1e-13);
    }

    #[test]
    fn quadrature_matches_series() {
        let q = EvalOptions {
            method: MethodPolicy::Quadrature,
            ..opts()
        };
        for (fam, a, b, x) in [
            (Family::IntegralMl, 1.0, 1.0, 1.0),
            (Family::IntegralMl, 0.5, 2.0, 2.0),
            (Family::IntegralWright, 1.0, 2.0, 2.0),
            (Family::IntegralWright, 2.0, 0.5, -1.5),
        ] {
            let pp = p(fam, a, b);
            let s = eval_family(&pp, x, &opts()).unwrap();
            let qq = eval_family(&pp, x, &q).unwrap();
            assert!(
                ((s.value - qq.value) / s.value).abs() < 1e-9,
                "{fam:?} a={a} b={b} x={x}: {} vs {}",
                s.value,
                qq.value
            );
            assert_eq!(qq.method, Method::Quadrature);
        }
    }

    #[test]
    fn domain_rules() {
        assert!(Params::new(Family::MittagLeffler, -0.5, 1.0).is_err());
        assert!(Params::new(Family::MittagLeffler, 0.0, 0.0).is_err());
        assert!(Params::new(Family::Wright, -1.0, 1.0).is_err());
        let pp = p(Family::IntegralMl, 0.0, 1.0);
        assert!(eval_integral_ml(&pp, 1.5, &opts()).is_err());
        let bad = EvalOptions { tol: 2.0, ..opts() };
        assert!(eval_family(&pp, 0.5, &bad).is_err());
    }

    #[test]
    fn error_honesty_against_reference() {
        // alternating series with real cancellation: E_{1,1}(−12) = e^{−12}
        let e = eval_mittag_leffler(&p(Family::MittagLeffler, 1.0, 1.0), -12.0, &opts()).unwrap();
        let truth = math::exp(-12.0);
        assert!((e.value - truth).abs() <= 10.0 * e.abs_err_est);
    }

    #[test]
    fn overflow_is_reported() {
        let r = eval_mittag_leffler(&p(Family::MittagLeffler, 0.1, 0.0), 5.0, &opts());
        assert!(matches!(
            r,
            Err(EvalError::Overflow) | Err(EvalError::NonConvergence { .. })
        ));
    }
}
