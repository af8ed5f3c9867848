//! The eight parameter-derivative series: ∂/∂α and ∂/∂β of E, W, Ei, Wi.
//!
//! All eight share the summation kernel in `series`; only the k-weight and
//! starting index differ, and those live in a table rather than in code
//! branches. The coefficient is always the pole-safe quotient ψ/Γ, so the
//! series are the true analytic parameter derivatives even where αk + β
//! crosses non-positive integers.

use crate::error::Result;
use crate::series::{sum_family_series, Coeff, EvalOptions, Evaluation, Family, Params, Weight};
use crate::specfun::gamma::digamma_over_gamma;

/// Which parameter a derivative is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Wrt {
    Alpha,
    Beta,
}

impl Wrt {
    pub fn label(self) -> &'static str {
        match self {
            Wrt::Alpha => "alpha",
            Wrt::Beta => "beta",
        }
    }
}

/// A (family, parameter) derivative target; any combination is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DerivTarget {
    pub family: Family,
    pub wrt: Wrt,
}

// weight table for the eight series (k-power, 1/k! flag, starting k)
fn deriv_weight(t: DerivTarget) -> Weight {
    let inv_factorial = t.family.is_wright();
    match (t.family.is_integral(), t.wrt) {
        // d/dα of E, W carries an extra factor k (its k = 0 term vanishes)
        (false, Wrt::Alpha) => Weight {
            k_power: 1,
            inv_factorial,
            start_k: 1,
        },
        (false, Wrt::Beta) => Weight {
            k_power: 0,
            inv_factorial,
            start_k: 0,
        },
        (true, Wrt::Alpha) => Weight {
            k_power: 0,
            inv_factorial,
            start_k: 1,
        },
        (true, Wrt::Beta) => Weight {
            k_power: -1,
            inv_factorial,
            start_k: 1,
        },
    }
}

/// ∂F/∂α or ∂F/∂β at (α, β; x), by direct summation.
///
/// This is the series route; closed forms live in the reduction registry
/// and are selected a level up (the CLI's `auto` policy).
pub fn param_derivative(
    t: DerivTarget,
    p: &Params,
    x: f64,
    opts: &EvalOptions,
) -> Result<Evaluation> {
    if p.family() != t.family {
        return Err(crate::error::EvalError::Domain(
            "params constructed for a different family",
        ));
    }
    if !matches!(
        opts.method,
        crate::series::MethodPolicy::Auto | crate::series::MethodPolicy::Series
    ) {
        return Err(crate::error::EvalError::Domain(
            "param_derivative sums the series; closed forms go through the registry",
        ));
    }
    p.check_x(x)?;
    sum_family_series(
        p.alpha(),
        p.beta(),
        x,
        deriv_weight(t),
        Coeff::DigammaOverGamma,
        -1.0,
        opts,
    )
}

/// Both sides of the Wright-family interrelation
/// ∂Wi/∂α = ψ(β)/Γ(β) + ∂W/∂β, with ψ/Γ taken pole-safe so the identity
/// holds for every β including 0, −1, −2, … (at those points the explicit
/// quotient term cancels the k = 0 term of the ∂W/∂β series, reproducing
/// the plain equality of the two series).
pub fn deriv_interrelation_sides(
    alpha: f64,
    beta: f64,
    x: f64,
    opts: &EvalOptions,
) -> Result<(f64, f64)> {
    let wi = Params::new(Family::IntegralWright, alpha, beta)?;
    let w = Params::new(Family::Wright, alpha, beta)?;
    let lhs = param_derivative(
        DerivTarget {
            family: Family::IntegralWright,
            wrt: Wrt::Alpha,
        },
        &wi,
        x,
        opts,
    )?;
    let rhs = param_derivative(
        DerivTarget {
            family: Family::Wright,
            wrt: Wrt::Beta,
        },
        &w,
        x,
        opts,
    )?;
    Ok((lhs.value, digamma_over_gamma(beta) + rhs.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma::EULER_GAMMA;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    fn d(family: Family, wrt: Wrt, a: f64, b: f64, x: f64) -> f64 {
        let p = Params::new(family, a, b).unwrap();
        param_derivative(DerivTarget { family, wrt }, &p, x, &opts())
            .unwrap()
            .value
    }

    #[test]
    fn geometric_case() {
        // ∂Ei/∂α at α = 0: ψ(β)/Γ(β) · x/(x−1); at β = 1, x = 1/2 this is γ
        let v = d(Family::IntegralMl, Wrt::Alpha, 0.0, 1.0, 0.5);
        assert!((v - EULER_GAMMA).abs() < 1e-14);
    }

    #[test]
    fn integral_families_vanish_at_origin() {
        for fam in [Family::IntegralMl, Family::IntegralWright] {
            for wrt in [Wrt::Alpha, Wrt::Beta] {
                assert_eq!(d(fam, wrt, 1.3, 0.7, 0.0), 0.0);
            }
        }
    }

    #[test]
    fn wright_beta_derivative_is_bessel_combination() {
        // ∂W/∂β at α = β = 1, x = 1 equals −K₀(2)
        let v = d(Family::Wright, Wrt::Beta, 1.0, 1.0, 1.0);
        assert!((v + 0.113_893_872_749_533_44).abs() < 1e-13);
    }

    #[test]
    fn reference_values_all_eight() {
        let cases = [
            (Family::IntegralMl, Wrt::Alpha, -1.173_563_027_224_726_9),
            (Family::IntegralMl, Wrt::Beta, -0.742_295_033_261_459_50),
            (
                Family::IntegralWright,
                Wrt::Alpha,
                -0.691_109_537_651_066_30,
            ),
            (Family::IntegralWright, Wrt::Beta, -0.550_441_102_727_732_30),
            (Family::MittagLeffler, Wrt::Alpha, -2.314_629_190_782_239_3),
            (Family::MittagLeffler, Wrt::Beta, -0.596_347_362_323_194_07),
            (Family::Wright, Wrt::Alpha, -0.999_926_769_351_511_21),
            (Family::Wright, Wrt::Beta, -0.113_893_872_749_533_44),
        ];
        for (fam, wrt, want) in cases {
            let got = d(fam, wrt, 1.0, 1.0, 1.0);
            assert!(
                ((got - want) / want).abs() < 1e-12,
                "{fam:?}/{wrt:?}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn pole_sweep_values() {
        // coefficients cross gamma poles; quad-precision series fixtures
        let g = d(Family::IntegralMl, Wrt::Alpha, 3.0, -2.0, 0.8);
        assert!(((g - 0.326_452_346_149_770_40) / g).abs() < 1e-12);
        let j = d(Family::IntegralWright, Wrt::Beta, 0.3, -0.5, 2.0);
        assert!(((j - 3.184_540_556_523_025_8) / j).abs() < 1e-12);
        let h = d(Family::IntegralMl, Wrt::Beta, 2.0, 0.5, 2.5);
        assert!(((h + 1.729_439_921_840_148_2) / h).abs() < 1e-12);
    }

    #[test]
    fn interrelation_holds_including_beta_zero() {
        for (a, b, x) in [
            (1.0, 1.0, 1.0),
            (2.0, 0.5, 0.7),
            (1.0, 0.0, 2.0),
            (1.5, -1.0, 0.5),
        ] {
            let (lhs, rhs) = deriv_interrelation_sides(a, b, x, &opts()).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs()),
                "a={a} b={b} x={x}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn finite_difference_cross_check() {
        use crate::fdiff::central_diff;
        use crate::series::eval_family;
        // dE/dβ by differencing the base series in β
        let (fd, _) = central_diff(
            |b| {
                let p = Params::new(Family::MittagLeffler, 0.8, b).unwrap();
                Ok(eval_family(&p, 1.2, &opts())?.value)
            },
            0.9,
            1e-4,
        )
        .unwrap();
        let v = d(Family::MittagLeffler, Wrt::Beta, 0.8, 0.9, 1.2);
        assert!(((fd - v) / v).abs() < 1e-8, "fd={fd} v={v}");
    }

    #[test]
    fn large_alpha_limits() {
        // integral families and the α-derivatives decay; the β-derivatives
        // of E and W approach their α-independent k = 0 term −ψ(β)/Γ(β)
        assert!(d(Family::IntegralMl, Wrt::Alpha, 20.0, 1.0, 5.0).abs() < 1e-3);
        assert!(d(Family::IntegralWright, Wrt::Beta, 20.0, 0.0, 5.0).abs() < 1e-3);
        assert!(d(Family::MittagLeffler, Wrt::Alpha, 20.0, 1.0, 5.0).abs() < 1e-3);
        let e_beta = d(Family::MittagLeffler, Wrt::Beta, 20.0, 1.0, 5.0);
        assert!((e_beta - EULER_GAMMA).abs() < 1e-12);
        let w_beta0 = d(Family::Wright, Wrt::Beta, 20.0, 0.0, 5.0);
        assert!((w_beta0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn x_weighting_relation() {
        use crate::fdiff::central_diff;
        // ∂F/∂α = x d/dx (∂F/∂β) for the Wright family (same shape for all)
        let x0 = 1.1;
        let (dx, _) =
            central_diff(|x| Ok(d(Family::Wright, Wrt::Beta, 1.3, 0.8, x)), x0, 1e-4).unwrap();
        let lhs = d(Family::Wright, Wrt::Alpha, 1.3, 0.8, x0);
        assert!(((lhs - x0 * dx) / lhs).abs() < 1e-8);
    }

    #[test]
    fn alpha_zero_series_decay() {
        // ∂E/∂β at α=0: −ψ(β)/Γ(β)/(1−x), still a plain geometric sum
        let v = d(Family::MittagLeffler, Wrt::Beta, 0.0, 1.0, 0.5);
        assert!((v - 2.0 * EULER_GAMMA).abs() < 1e-13);
    }
}
