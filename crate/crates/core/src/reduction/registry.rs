//! Registry of closed-form evaluators for special (α, β) parameter pairs.
//!
//! Keys match α against an exact rational and β either exactly or as a
//! wildcard; floating keys would silently miss entries, so the α values
//! stored here are all exactly representable. Each entry evaluates through
//! specfun primitives only and carries a human-readable citation string (the
//! formula itself), which the CLI prints when a closed form is used.

use crate::deriv::Wrt;
use crate::error::{EvalError, Result};
use crate::math;
use crate::series::{Evaluation, Family, Method};
use crate::specfun::bessel::{bessel_i, bessel_k};
use crate::specfun::elem::erf;
use crate::specfun::expint::{chi, ci, ei, shi, si};
use crate::specfun::gamma::{digamma, digamma_over_gamma, EULER_GAMMA};
use crate::specfun::hyper::pfq_value;

use super::{dei_dalpha_integer_alpha, dei_dalpha_reciprocal_alpha, dwi_dalpha_alpha_one, ValMag};

/// Exact rational parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i32,
    pub den: i32,
}

impl Rational {
    pub const fn new(num: i32, den: i32) -> Self {
        Rational { num, den }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// β key: exact rational, or any β accepted by the evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaPattern {
    Exact(Rational),
    Any,
}

/// Admissible x range of an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XDomain {
    /// x > 0
    Positive,
    /// |x| < 1 (geometric case)
    UnitDisc,
}

impl XDomain {
    pub fn contains(&self, x: f64) -> bool {
        match self {
            XDomain::Positive => x > 0.0,
            XDomain::UnitDisc => math::fabs(x) < 1.0,
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            XDomain::Positive => "x > 0",
            XDomain::UnitDisc => "|x| < 1",
        }
    }
}

type EvalFn = fn(beta: f64, x: f64) -> Result<ValMag>;

/// One registry row: key, evaluator, citation and x-domain.
pub struct ClosedFormEntry {
    pub family: Family,
    pub wrt: Wrt,
    pub alpha: Rational,
    pub beta: BetaPattern,
    pub citation: &'static str,
    pub x_domain: XDomain,
    eval: EvalFn,
}

impl ClosedFormEntry {
    pub fn evaluate(&self, beta: f64, x: f64) -> Result<Evaluation> {
        if !self.x_domain.contains(x) {
            return Err(EvalError::Domain(self.x_domain.describe()));
        }
        let (value, mag) = (self.eval)(beta, x)?;
        Ok(Evaluation {
            value,
            abs_err_est: f64::EPSILON * mag,
            terms_used: 0,
            method: Method::ClosedForm,
        })
    }
}

/// Find the entry for a key; exact-β rows win over wildcard rows.
pub fn registry_lookup(
    family: Family,
    wrt: Wrt,
    alpha: f64,
    beta: f64,
) -> Option<&'static ClosedFormEntry> {
    let all = registry_entries();
    all.iter()
        .find(|e| {
            e.family == family
                && e.wrt == wrt
                && e.alpha.as_f64() == alpha
                && matches!(e.beta, BetaPattern::Exact(r) if r.as_f64() == beta)
        })
        .or_else(|| {
            all.iter().find(|e| {
                e.family == family
                    && e.wrt == wrt
                    && e.alpha.as_f64() == alpha
                    && e.beta == BetaPattern::Any
            })
        })
}

/// Evaluate a registry key at x, or report an unknown key.
pub fn closed_form_registry_eval(
    family: Family,
    wrt: Wrt,
    alpha: f64,
    beta: f64,
    x: f64,
) -> Result<Evaluation> {
    match registry_lookup(family, wrt, alpha, beta) {
        Some(entry) => entry.evaluate(beta, x),
        None => Err(EvalError::UnknownKey),
    }
}

// ---------------------------------------------------------------------------
// evaluators
// ---------------------------------------------------------------------------

// ln x − Ei(−x), the recurring combination for α = 1 rows
fn lnx_minus_ei_neg(x: f64) -> Result<f64> {
    Ok(math::log(x) - ei(-x)?)
}

fn ei_da_geometric(beta: f64, x: f64) -> Result<ValMag> {
    let v = digamma_over_gamma(beta) * x / (x - 1.0);
    Ok((v, math::fabs(v)))
}

fn ei_da_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let v = -x * math::exp(x) * lnx_minus_ei_neg(x)?;
    Ok((v, math::fabs(v)))
}

fn ei_da_a1_b1(_b: f64, x: f64) -> Result<ValMag> {
    let t = math::exp(x) * lnx_minus_ei_neg(x)?;
    Ok((-t - EULER_GAMMA, math::fabs(t) + EULER_GAMMA))
}

fn ei_da_a1_b2(_b: f64, x: f64) -> Result<ValMag> {
    let t = (EULER_GAMMA * (x + 1.0) + math::exp(x) * lnx_minus_ei_neg(x)?) / x;
    Ok((1.0 - t, 1.0 + math::fabs(t)))
}

fn ei_da_a1_b3(_b: f64, x: f64) -> Result<ValMag> {
    let t1 = (3.0 * x + 4.0) * x;
    let t2 = 2.0 * EULER_GAMMA * ((x + 2.0) * x + 2.0);
    let t3 = 4.0 * math::exp(x) * lnx_minus_ei_neg(x)?;
    let d = 4.0 * x * x;
    Ok((
        (t1 - t2 - t3) / d,
        (math::fabs(t1) + math::fabs(t2) + math::fabs(t3)) / d,
    ))
}

fn ei_da_a1_any(beta: f64, x: f64) -> Result<ValMag> {
    let e = dei_dalpha_reciprocal_alpha(1, beta, x)?;
    Ok((e.value, e.abs_err_est / f64::EPSILON))
}

fn ei_da_a2_bm1(_b: f64, x: f64) -> Result<ValMag> {
    let e = dei_dalpha_integer_alpha(2, 1, x)?;
    Ok((e.value, e.abs_err_est / f64::EPSILON))
}

fn ei_da_a2_b0(_b: f64, x: f64) -> Result<ValMag> {
    let s = math::sqrt(x);
    let t1 = math::sinh(s) * (chi(s)? - math::log(s));
    let t2 = math::cosh(s) * shi(s)?;
    Ok((s * (t1 - t2), s * (math::fabs(t1) + math::fabs(t2))))
}

fn ei_da_a2_b1(_b: f64, x: f64) -> Result<ValMag> {
    let s = math::sqrt(x);
    let t1 = math::cosh(s) * (chi(s)? - math::log(s));
    let t2 = shi(s)? * math::sinh(s);
    Ok((
        t1 - t2 - EULER_GAMMA,
        math::fabs(t1) + math::fabs(t2) + EULER_GAMMA,
    ))
}

fn ei_da_a2_b2(_b: f64, x: f64) -> Result<ValMag> {
    let s = math::sqrt(x);
    let t1 = math::sinh(s) * (chi(s)? - math::log(s));
    let t2 = shi(s)? * math::cosh(s);
    let v = (t1 - t2) / s + 1.0 - EULER_GAMMA;
    Ok((v, (math::fabs(t1) + math::fabs(t2)) / s + 1.0 + EULER_GAMMA))
}

fn ei_da_a4_b0(_b: f64, x: f64) -> Result<ValMag> {
    let r = math::pow(x, 0.25);
    let lnx = math::log(x);
    let t1 = 4.0 * math::sinh(r) * chi(r)?;
    let t2 = math::sin(r) * (lnx - 4.0 * ci(r)?);
    let t3 = 4.0 * math::cosh(r) * shi(r)?;
    let t4 = 4.0 * math::cos(r) * si(r)?;
    let t5 = math::sinh(r) * lnx;
    let v = r / 8.0 * (t1 + t2 - t3 + t4 - t5);
    let mag = r / 8.0
        * (math::fabs(t1) + math::fabs(t2) + math::fabs(t3) + math::fabs(t4) + math::fabs(t5));
    Ok((v, mag))
}

fn ei_da_ahalf_b1(_b: f64, x: f64) -> Result<ValMag> {
    const LN4: f64 = 1.386_294_361_119_890_6;
    let x2 = x * x;
    let ex = math::exp(x2);
    let t1 =
        4.0 * x / math::sqrt(core::f64::consts::PI) * pfq_value(&[0.5, 0.5], &[1.5, 1.5], -x2)?;
    let t2 = (EULER_GAMMA + LN4) * erf(x)?;
    let t3 = ei(-x2)?;
    let t4 = 2.0 * math::log(x);
    let v = ex * (-t1 + t2 + t3 - t4) - EULER_GAMMA;
    let mag =
        ex * (math::fabs(t1) + math::fabs(t2) + math::fabs(t3) + math::fabs(t4)) + EULER_GAMMA;
    Ok((v, mag))
}

fn ei_da_ahalf_any(beta: f64, x: f64) -> Result<ValMag> {
    let e = dei_dalpha_reciprocal_alpha(2, beta, x)?;
    Ok((e.value, e.abs_err_est / f64::EPSILON))
}

fn ei_db_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let ex = math::exp(x);
    let t1 = ex * ei(-x)?;
    let t2 = ei(x)?;
    let t3 = (ex + 1.0) * math::log(x);
    let v = t1 + t2 - t3 - 2.0 * EULER_GAMMA;
    Ok((
        v,
        math::fabs(t1) + math::fabs(t2) + math::fabs(t3) + 2.0 * EULER_GAMMA,
    ))
}

fn ei_db_a2_b0(_b: f64, x: f64) -> Result<ValMag> {
    let s = math::sqrt(x);
    let t1 = 2.0 * chi(s)? * (math::cosh(s) + 1.0);
    let t2 = 2.0 * shi(s)? * math::sinh(s);
    let t3 = math::log(x) * (math::cosh(s) + 1.0);
    let v = t1 - t2 - t3 - 4.0 * EULER_GAMMA;
    Ok((
        v,
        math::fabs(t1) + math::fabs(t2) + math::fabs(t3) + 4.0 * EULER_GAMMA,
    ))
}

fn ei_db_a4_b0(_b: f64, x: f64) -> Result<ValMag> {
    let r = math::pow(x, 0.25);
    let t1 = 2.0 * chi(r)? * (math::cosh(r) + 1.0);
    let t2 = 2.0 * ci(r)? * (math::cos(r) + 1.0);
    let t3 = 2.0 * shi(r)? * math::sinh(r);
    let t4 = 2.0 * si(r)? * math::sin(r);
    let t5 = 0.5 * math::log(x) * (math::cos(r) + math::cosh(r) + 2.0);
    let v = t1 + t2 - t3 + t4 - t5 - 8.0 * EULER_GAMMA;
    let mag = math::fabs(t1)
        + math::fabs(t2)
        + math::fabs(t3)
        + math::fabs(t4)
        + math::fabs(t5)
        + 8.0 * EULER_GAMMA;
    Ok((v, mag))
}

fn ei_db_a2_b1(_b: f64, x: f64) -> Result<ValMag> {
    let s = math::sqrt(x);
    let t1 = x / 4.0 * pfq_value(&[1.0, 1.0, 1.0], &[2.0, 2.0, 2.0, 1.5], x / 4.0)?;
    let c = math::log(s) - chi(s)?;
    let t2 = c * c;
    let sh = shi(s)?;
    let t3 = sh * sh;
    let g2 = EULER_GAMMA * EULER_GAMMA;
    Ok((t1 + t2 - t3 - g2, math::fabs(t1) + t2 + t3 + g2))
}

// 2√x Bessel bundle for the Wright-family rows
struct BesselPack {
    i0: f64,
    i1: f64,
    k0: f64,
    k1: f64,
    lnx: f64,
    sx: f64,
}

fn pack(x: f64) -> Result<BesselPack> {
    let sx = math::sqrt(x);
    let z = 2.0 * sx;
    Ok(BesselPack {
        i0: bessel_i(0.0, z)?,
        i1: bessel_i(1.0, z)?,
        k0: bessel_k(0.0, z)?,
        k1: bessel_k(1.0, z)?,
        lnx: math::log(x),
        sx,
    })
}

fn wi_da_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t = p.sx * (p.lnx * p.i1 - 2.0 * p.k1);
    let v = 0.5 * (p.i0 - t) - 1.0;
    Ok((v, 0.5 * (p.i0 + math::fabs(t)) + 1.0))
}

fn wi_da_a1_bhalf(_b: f64, x: f64) -> Result<ValMag> {
    let s2 = 2.0 * math::sqrt(x);
    let s4 = 2.0 * s2;
    let t1 = math::cosh(s2) * (chi(s4)? - 0.5 * math::log(x));
    let t2 = shi(s4)? * math::sinh(s2);
    let psi_half = digamma(0.5)?;
    let inv = 1.0 / math::sqrt(core::f64::consts::PI);
    let v = inv * (t1 - t2 + psi_half);
    Ok((
        v,
        inv * (math::fabs(t1) + math::fabs(t2) + math::fabs(psi_half)),
    ))
}

fn wi_da_a1_b1(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let v = -EULER_GAMMA - 0.5 * p.lnx * p.i0 - p.k0;
    Ok((v, EULER_GAMMA + math::fabs(0.5 * p.lnx * p.i0) + p.k0))
}

fn wi_da_a1_b3half(_b: f64, x: f64) -> Result<ValMag> {
    let sx = math::sqrt(x);
    let s2 = 2.0 * sx;
    let s4 = 2.0 * s2;
    let t1 = math::sinh(s2) * (2.0 * chi(s4)? - math::log(x));
    let t2 = 2.0 * shi(s4)? * math::cosh(s2);
    let t3 = 4.0 * sx * digamma(1.5)?;
    let inv = 1.0 / (2.0 * math::sqrt(core::f64::consts::PI * x));
    let v = inv * (t1 - t2 + t3);
    Ok((v, inv * (math::fabs(t1) + math::fabs(t2) + math::fabs(t3))))
}

fn wi_da_a1_b2(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t1 = p.i0 / (2.0 * x);
    let t2 = (2.0 * p.k1 - p.lnx * p.i1) / (2.0 * p.sx);
    let v = 1.0 - EULER_GAMMA - t1 + t2;
    Ok((v, 1.0 + EULER_GAMMA + math::fabs(t1) + math::fabs(t2)))
}

fn wi_db_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t1 = -EULER_GAMMA - 0.5 * p.lnx * p.i0 - p.k0;
    let t2 = x * pfq_value(&[1.0, 1.0], &[2.0, 2.0, 2.0], x)?;
    Ok((t1 + t2, math::fabs(t1) + math::fabs(t2)))
}

fn w_da_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let v = -x * (p.k0 + 0.5 * p.i0 * p.lnx);
    Ok((v, x * (p.k0 + math::fabs(0.5 * p.i0 * p.lnx))))
}

fn w_da_a1_b1(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t = p.sx * (2.0 * p.k1 - p.lnx * p.i1);
    Ok((0.5 * (t - p.i0), 0.5 * (math::fabs(t) + p.i0)))
}

fn w_da_a1_b2(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let z = 2.0 * p.sx;
    let i2 = bessel_i(2.0, z)?;
    let k2 = bessel_k(2.0, z)?;
    let t1 = p.i0 / (2.0 * x);
    let t2 = p.i1 / p.sx;
    let t3 = 0.5 * p.lnx * i2;
    let v = t1 - t2 - t3 - k2;
    Ok((v, math::fabs(t1) + math::fabs(t2) + math::fabs(t3) + k2))
}

// the direct series for dW/dβ at β = 0 keeps the pole-safe k = 0 limit
// term ψ(0)/Γ(0) → −1; it cancels the printed −1 of the summed form
fn w_db_a1_b0(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t = p.sx * (p.lnx * p.i1 - 2.0 * p.k1);
    Ok((0.5 * (p.i0 - t), 0.5 * (p.i0 + math::fabs(t)) + 1.0))
}

fn w_db_a1_b1(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t = 0.5 * p.lnx * p.i0;
    Ok((-t - p.k0, math::fabs(t) + p.k0))
}

fn w_db_a1_b2(_b: f64, x: f64) -> Result<ValMag> {
    let p = pack(x)?;
    let t1 = (2.0 * p.k1 - p.lnx * p.i1) / (2.0 * p.sx);
    let t2 = p.i0 / (2.0 * x);
    Ok((t1 - t2, math::fabs(t1) + math::fabs(t2)))
}

fn wi_da_a1_any(beta: f64, x: f64) -> Result<ValMag> {
    let e = dwi_dalpha_alpha_one(beta, x)?;
    Ok((e.value, e.abs_err_est / f64::EPSILON))
}

// a thin wrapper so the Q-based α = 1/2 rows for β = 2, 3 read as table rows
fn ei_da_ahalf_b2(beta: f64, x: f64) -> Result<ValMag> {
    ei_da_ahalf_any(beta, x)
}

fn ei_da_ahalf_b3(beta: f64, x: f64) -> Result<ValMag> {
    ei_da_ahalf_any(beta, x)
}

const fn rat(num: i32, den: i32) -> Rational {
    Rational::new(num, den)
}

const fn exact(num: i32, den: i32) -> BetaPattern {
    BetaPattern::Exact(rat(num, den))
}

macro_rules! entry {
    ($fam:ident, $wrt:ident, $a:expr, $b:expr, $dom:ident, $f:ident, $cit:literal) => {
        ClosedFormEntry {
            family: Family::$fam,
            wrt: Wrt::$wrt,
            alpha: $a,
            beta: $b,
            citation: $cit,
            x_domain: XDomain::$dom,
            eval: $f,
        }
    };
}

static ENTRIES: [ClosedFormEntry; 32] = [
    // --- dEi/dα ---
    entry!(IntegralMl, Alpha, rat(0, 1), BetaPattern::Any, UnitDisc, ei_da_geometric,
        "psi(b)/Gamma(b) * x/(x-1)"),
    entry!(IntegralMl, Alpha, rat(1, 1), exact(0, 1), Positive, ei_da_a1_b0,
        "-x e^x [ln x - Ei(-x)]"),
    entry!(IntegralMl, Alpha, rat(1, 1), exact(1, 1), Positive, ei_da_a1_b1,
        "-e^x [ln x - Ei(-x)] - g"),
    entry!(IntegralMl, Alpha, rat(1, 1), exact(2, 1), Positive, ei_da_a1_b2,
        "1 - (g(x+1) + e^x [ln x - Ei(-x)])/x"),
    entry!(IntegralMl, Alpha, rat(1, 1), exact(3, 1), Positive, ei_da_a1_b3,
        "((3x+4)x - 2g((x+2)x+2) - 4e^x [ln x - Ei(-x)])/(4x^2)"),
    entry!(IntegralMl, Alpha, rat(1, 1), BetaPattern::Any, Positive, ei_da_a1_any,
        "-Q(b, x)/Gamma(b)"),
    entry!(IntegralMl, Alpha, rat(2, 1), exact(-1, 1), Positive, ei_da_a2_bm1,
        "-(x/2) sum over square roots of unity of e^xi [Ein(xi) - g]"),
    entry!(IntegralMl, Alpha, rat(2, 1), exact(0, 1), Positive, ei_da_a2_b0,
        "sqrt(x) [sinh sqrt(x) (Chi sqrt(x) - ln sqrt(x)) - cosh sqrt(x) Shi sqrt(x)]"),
    entry!(IntegralMl, Alpha, rat(2, 1), exact(1, 1), Positive, ei_da_a2_b1,
        "cosh sqrt(x) [Chi sqrt(x) - ln sqrt(x)] - Shi sqrt(x) sinh sqrt(x) - g"),
    entry!(IntegralMl, Alpha, rat(2, 1), exact(2, 1), Positive, ei_da_a2_b2,
        "x^{-1/2} [sinh sqrt(x)(Chi - ln) - Shi cosh] + 1 - g"),
    entry!(IntegralMl, Alpha, rat(4, 1), exact(0, 1), Positive, ei_da_a4_b0,
        "x^{1/4}/8 [4 sinh Chi + sin (ln x - 4 Ci) - 4 cosh Shi + 4 cos Si - sinh ln x] at x^{1/4}"),
    entry!(IntegralMl, Alpha, rat(1, 2), exact(1, 1), Positive, ei_da_ahalf_b1,
        "e^{x^2} [-(4x/sqrt(pi)) 2F2(1/2,1/2;3/2,3/2;-x^2) + (g + ln 4) erf x + Ei(-x^2) - 2 ln x] - g"),
    entry!(IntegralMl, Alpha, rat(1, 2), exact(2, 1), Positive, ei_da_ahalf_b2,
        "-[Q(2, x^2) + Q(3/2, x^2)/(x Gamma(3/2))]"),
    entry!(IntegralMl, Alpha, rat(1, 2), exact(3, 1), Positive, ei_da_ahalf_b3,
        "-[Q(3, x^2)/2 + Q(5/2, x^2)/(x Gamma(5/2))]"),
    entry!(IntegralMl, Alpha, rat(1, 2), BetaPattern::Any, Positive, ei_da_ahalf_any,
        "-[Q(b, x^2)/Gamma(b) + Q(b - 1/2, x^2)/(x Gamma(b - 1/2))]"),
    // --- dEi/dβ ---
    entry!(IntegralMl, Beta, rat(1, 1), exact(0, 1), Positive, ei_db_a1_b0,
        "e^x Ei(-x) + Ei(x) - (e^x + 1) ln x - 2g"),
    entry!(IntegralMl, Beta, rat(2, 1), exact(0, 1), Positive, ei_db_a2_b0,
        "2 Chi sqrt(x) [cosh sqrt(x) + 1] - 2 Shi sqrt(x) sinh sqrt(x) - ln x [cosh sqrt(x) + 1] - 4g"),
    entry!(IntegralMl, Beta, rat(4, 1), exact(0, 1), Positive, ei_db_a4_b0,
        "2 Chi (cosh + 1) + 2 Ci (cos + 1) - 2 Shi sinh + 2 Si sin - (ln x)/2 (cos + cosh + 2) - 8g, all at x^{1/4}"),
    entry!(IntegralMl, Beta, rat(2, 1), exact(1, 1), Positive, ei_db_a2_b1,
        "(x/4) 3F4(1,1,1;2,2,2,3/2;x/4) + [ln sqrt(x) - Chi sqrt(x)]^2 - Shi^2 sqrt(x) - g^2"),
    // --- dWi/dα at α = 1 ---
    entry!(IntegralWright, Alpha, rat(1, 1), exact(0, 1), Positive, wi_da_a1_b0,
        "[I0 - sqrt(x)(ln x I1 - 2 K1)]/2 - 1, Bessel at 2 sqrt(x)"),
    entry!(IntegralWright, Alpha, rat(1, 1), exact(1, 2), Positive, wi_da_a1_bhalf,
        "[cosh(2 sqrt x)(Chi(4 sqrt x) - ln(x)/2) - Shi(4 sqrt x) sinh(2 sqrt x) + psi(1/2)]/sqrt(pi)"),
    entry!(IntegralWright, Alpha, rat(1, 1), exact(1, 1), Positive, wi_da_a1_b1,
        "-g - (ln x) I0/2 - K0, Bessel at 2 sqrt(x)"),
    entry!(IntegralWright, Alpha, rat(1, 1), exact(3, 2), Positive, wi_da_a1_b3half,
        "[sinh(2 sqrt x)(2 Chi(4 sqrt x) - ln x) - 2 Shi(4 sqrt x) cosh(2 sqrt x) + 4 sqrt(x) psi(3/2)]/(2 sqrt(pi x))"),
    entry!(IntegralWright, Alpha, rat(1, 1), exact(2, 1), Positive, wi_da_a1_b2,
        "1 - g - I0/(2x) + (2 K1 - ln x I1)/(2 sqrt x), Bessel at 2 sqrt(x)"),
    entry!(IntegralWright, Alpha, rat(1, 1), BetaPattern::Any, Positive, wi_da_a1_any,
        "Bessel-I / 3F4 / 2F3 combination for non-integer b"),
    // --- dWi/dβ at α = 1 ---
    entry!(IntegralWright, Beta, rat(1, 1), exact(0, 1), Positive, wi_db_a1_b0,
        "-g - (ln x) I0/2 - K0 + x 2F3(1,1;2,2,2;x), Bessel at 2 sqrt(x)"),
    // --- dW/dα at α = 1 ---
    entry!(Wright, Alpha, rat(1, 1), exact(0, 1), Positive, w_da_a1_b0,
        "-x [K0 + I0 (ln x)/2], Bessel at 2 sqrt(x)"),
    entry!(Wright, Alpha, rat(1, 1), exact(1, 1), Positive, w_da_a1_b1,
        "[sqrt(x)(2 K1 - ln x I1) - I0]/2, Bessel at 2 sqrt(x)"),
    entry!(Wright, Alpha, rat(1, 1), exact(2, 1), Positive, w_da_a1_b2,
        "I0/(2x) - I1/sqrt(x) - (ln x) I2/2 - K2, Bessel at 2 sqrt(x)"),
    // --- dW/dβ at α = 1 ---
    entry!(Wright, Beta, rat(1, 1), exact(0, 1), Positive, w_db_a1_b0,
        "[I0 - sqrt(x)(ln x I1 - 2 K1)]/2, Bessel at 2 sqrt(x), k = 0 limit term included"),
    entry!(Wright, Beta, rat(1, 1), exact(1, 1), Positive, w_db_a1_b1,
        "-(ln x) I0/2 - K0, Bessel at 2 sqrt(x)"),
    entry!(Wright, Beta, rat(1, 1), exact(2, 1), Positive, w_db_a1_b2,
        "(2 K1 - ln x I1)/(2 sqrt x) - I0/(2x), Bessel at 2 sqrt(x)"),
];

/// All registry rows.
pub fn registry_entries() -> &'static [ClosedFormEntry] {
    &ENTRIES
}
