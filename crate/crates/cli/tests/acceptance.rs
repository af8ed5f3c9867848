//! Acceptance suite: ten criteria, one test each, every tolerance pinned in
//! code. Each test prints a single `acceptance N (...): PASS/FAIL` line
//! (visible with `--nocapture`) before asserting.
//!
//! Run with:  cargo test -p mlwright-cli --test acceptance -- --nocapture

use mlwright::deriv::{DerivTarget, Wrt};
use mlwright::fdiff::central_diff;
use mlwright::reduction;
use mlwright::series::{eval_family, EvalOptions, Family, Params};
use mlwright::specfun::{
    bessel_i, digamma, digamma_over_gamma, e1, ein_real, exp_polynomial, gamma, lower_gamma, pfq,
    pfq_regularized, upper_gamma, EULER_GAMMA,
};
use mlwright::validate::{Rng, RNG_SEED};
use mlwright::{param_derivative, run_suite, SuiteName};
use std::time::{Duration, Instant};

struct Criterion {
    name: &'static str,
    budget: Duration,
    started: Instant,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new(name: &'static str, budget_s: f64) -> Self {
        Criterion {
            name,
            budget: Duration::from_secs_f64(budget_s),
            started: Instant::now(),
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        let in_budget = elapsed <= self.budget;
        let ok = self.failures.is_empty() && in_budget;
        println!(
            "acceptance {}: {} ({} checks, {:.0?} of {:.0?} budget)",
            self.name,
            if ok { "PASS" } else { "FAIL" },
            self.checks,
            elapsed,
            self.budget,
        );
        for f in self.failures.iter().take(10) {
            println!("    {f}");
        }
        if self.failures.len() > 10 {
            println!("    ... and {} more", self.failures.len() - 10);
        }
        assert!(
            ok,
            "{} failed checks, in_budget={in_budget}",
            self.failures.len()
        );
    }
}

fn rel_ok(lhs: f64, rhs: f64, tol: f64) -> bool {
    let abs = (lhs - rhs).abs();
    abs <= tol || abs <= tol * rhs.abs()
}

fn series(family: Family, wrt: Wrt, a: f64, b: f64, x: f64) -> f64 {
    let p = Params::new(family, a, b).unwrap();
    param_derivative(DerivTarget { family, wrt }, &p, x, &EvalOptions::default())
        .unwrap()
        .value
}

#[test]
fn criterion_01_specfun_invariants() {
    let mut c = Criterion::new(
        "1 (specfun invariant suite, >= 2500 randomized checks)",
        5.0,
    );
    let mut rng = Rng::new(RNG_SEED);

    for _ in 0..1000 {
        let z = rng.range(0.01, 50.0);
        let lhs = digamma(z + 1.0).unwrap();
        let rhs = 1.0 / z + digamma(z).unwrap();
        c.require((lhs - rhs).abs() <= 1e-13 * (1.0 + rhs.abs()), || {
            format!("digamma recurrence at z={z}")
        });
    }

    for _ in 0..600 {
        let a = rng.range(0.1, 10.0);
        let x = rng.range(0.1, 10.0);
        let g = gamma(a).unwrap();
        let s = lower_gamma(a, x).unwrap() + upper_gamma(a, x).unwrap();
        c.require(((s - g) / g).abs() <= 1e-12, || {
            format!("incomplete-gamma complement at a={a} x={x}")
        });
    }

    // Γ(k, x) = (k−1)! e_{k−1}(x) e^{−x}: the pinned grid plus random draws
    for k in 1..=8u32 {
        for &x in &[0.5, 1.0, 3.0] {
            let lhs = upper_gamma(k as f64, x).unwrap();
            let mut fact = 1.0;
            for j in 2..k {
                fact *= j as f64;
            }
            let rhs = fact * exp_polynomial(k - 1, x) * (-x).exp();
            c.require(((lhs - rhs) / rhs).abs() <= 1e-12, || {
                format!("upper-gamma polynomial identity at k={k} x={x}")
            });
        }
    }
    for _ in 0..300 {
        let k = 1 + (rng.next_u64() % 9) as u32;
        let x = rng.range(0.05, 6.0);
        let lhs = upper_gamma(k as f64, x).unwrap();
        let mut fact = 1.0;
        for j in 2..k {
            fact *= j as f64;
        }
        let rhs = fact * exp_polynomial(k - 1, x) * (-x).exp();
        c.require(((lhs - rhs) / rhs).abs() <= 1e-12, || {
            format!("upper-gamma polynomial identity at k={k} x={x}")
        });
    }

    // Ein − E1 − γ − ln x = 0
    for &x in &[0.1, 1.0, 5.0] {
        let d = ein_real(x).unwrap() - e1(x).unwrap() - EULER_GAMMA - x.ln();
        c.require(d.abs() <= 1e-12, || format!("Ein/E1 identity at x={x}"));
    }
    for _ in 0..300 {
        let x = rng.range(0.05, 11.0);
        let d = ein_real(x).unwrap() - e1(x).unwrap() - EULER_GAMMA - x.ln();
        c.require(d.abs() <= 1e-12, || format!("Ein/E1 identity at x={x}"));
    }

    // ₀F₁(−; β; x) = Γ(β) x^{(1−β)/2} I_{β−1}(2√x)
    for &b in &[0.5, 1.0, 1.5, 2.0] {
        for &x in &[0.25, 1.0, 4.0] {
            let lhs = pfq(&[], &[b], x).unwrap().value;
            let rhs = gamma(b).unwrap()
                * x.powf((1.0 - b) / 2.0)
                * bessel_i(b - 1.0, 2.0 * x.sqrt()).unwrap();
            c.require(((lhs - rhs) / rhs).abs() <= 1e-10, || {
                format!("0F1/Bessel relation at b={b} x={x}")
            });
        }
    }
    for _ in 0..300 {
        let b = rng.range(0.3, 3.0);
        let x = rng.range(0.1, 5.0);
        let lhs = pfq(&[], &[b], x).unwrap().value;
        let rhs = gamma(b).unwrap()
            * x.powf((1.0 - b) / 2.0)
            * bessel_i(b - 1.0, 2.0 * x.sqrt()).unwrap();
        c.require(((lhs - rhs) / rhs).abs() <= 1e-10, || {
            format!("0F1/Bessel relation at b={b} x={x}")
        });
    }

    // regularized × ΠΓ(b_j) = plain
    for _ in 0..300 {
        let a = rng.range(0.2, 3.0);
        let b1 = rng.range(0.3, 4.0);
        let b2 = rng.range(0.3, 4.0);
        let x = rng.range(-2.0, 2.0);
        let plain = pfq(&[a, 1.0], &[b1, b2], x).unwrap().value;
        let reg = pfq_regularized(&[a, 1.0], &[b1, b2], x).unwrap().value;
        let scale = gamma(b1).unwrap() * gamma(b2).unwrap();
        c.require(((reg * scale - plain) / plain).abs() <= 1e-12, || {
            format!("regularized/plain consistency at a={a} b=({b1},{b2}) x={x}")
        });
    }

    assert!(c.checks >= 2500, "only {} randomized checks", c.checks);
    c.finish();
}

#[test]
fn criterion_02_eight_series_vs_finite_differences() {
    let mut c = Criterion::new("2 (eight series vs finite-difference oracle)", 10.0);
    let mut rng = Rng::new(RNG_SEED ^ 0x02);
    let opts = EvalOptions::default();
    for family in [
        Family::MittagLeffler,
        Family::Wright,
        Family::IntegralMl,
        Family::IntegralWright,
    ] {
        for wrt in [Wrt::Alpha, Wrt::Beta] {
            for _ in 0..20 {
                let a = rng.range(0.4, 2.2);
                let b = rng.range(0.3, 2.0);
                let x = rng.range(0.2, 2.0);
                let got = series(family, wrt, a, b, x);
                let (fd, _) = central_diff(
                    |t| {
                        let (pa, pb) = match wrt {
                            Wrt::Alpha => (t, b),
                            Wrt::Beta => (a, t),
                        };
                        let p = Params::new(family, pa, pb)?;
                        Ok(eval_family(&p, x, &opts)?.value)
                    },
                    match wrt {
                        Wrt::Alpha => a,
                        Wrt::Beta => b,
                    },
                    1e-5,
                )
                .unwrap();
                c.require(((got - fd) / fd).abs() <= 1e-6, || {
                    format!("{family:?}/{wrt:?} at a={a} b={b} x={x}: {got} vs fd {fd}")
                });
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_03_integer_alpha_reduction_vs_series() {
    let mut c = Criterion::new("3 (integer-alpha reduction vs direct series)", 2.0);
    for n in 1..=4u32 {
        for m in 0..n {
            for &x in &[0.5, 1.0, 4.0] {
                let (eval, residue) =
                    reduction::dei_dalpha_integer_alpha_with_residue(n, m, x).unwrap();
                let sv = series(Family::IntegralMl, Wrt::Alpha, n as f64, -(m as f64), x);
                c.require(rel_ok(eval.value, sv, 1e-8), || {
                    format!("value n={n} m={m} x={x}: {} vs {sv}", eval.value)
                });
                c.require(residue.abs() <= 1e-10 * (1.0 + eval.value.abs()), || {
                    format!("imaginary residue n={n} m={m} x={x}: {residue}")
                });
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_04_reciprocal_alpha_reductions_vs_series() {
    let mut c = Criterion::new("4 (Q/P/Bessel reductions vs series)", 5.0);
    // dEi/dα at α = 1/q (β where the shifted parameters avoid poles)
    for &(q, b) in &[
        (1u32, 0.5),
        (1, 1.0),
        (1, 2.0),
        (2, 1.0),
        (2, 2.0),
        (3, 0.5),
        (3, 1.0),
        (3, 2.0),
    ] {
        for &x in &[0.5, 0.9, 1.2] {
            let cf = reduction::dei_dalpha_reciprocal_alpha(q, b, x)
                .unwrap()
                .value;
            let sv = series(Family::IntegralMl, Wrt::Alpha, 1.0 / q as f64, b, x);
            c.require(rel_ok(cf, sv, 1e-8), || format!("dEi/da q={q} b={b} x={x}"));
        }
    }
    // dEi/dβ at α = 1/q, β = 0
    for q in 1..=3u32 {
        for &x in &[0.8, 1.0, 1.2] {
            let cf = reduction::dei_dbeta_reciprocal_alpha(q, x).unwrap().value;
            let sv = series(Family::IntegralMl, Wrt::Beta, 1.0 / q as f64, 0.0, x);
            c.require(rel_ok(cf, sv, 1e-8), || format!("dEi/db q={q} x={x}"));
        }
    }
    // dWi/dα at α = 1, non-integer β
    for &b in &[0.5, 1.5, 0.25] {
        for &x in &[0.6, 1.0, 2.0] {
            let cf = reduction::dwi_dalpha_alpha_one(b, x).unwrap().value;
            let sv = series(Family::IntegralWright, Wrt::Alpha, 1.0, b, x);
            c.require(rel_ok(cf, sv, 1e-8), || format!("dWi/da b={b} x={x}"));
        }
    }
    // dE/dβ and dE/dα at α = 1/q
    for &(q, b) in &[
        (1u32, 0.5),
        (1, 1.0),
        (1, 2.0),
        (2, 0.5),
        (2, 1.0),
        (2, 2.0),
        (3, 0.5),
        (3, 1.0),
        (3, 2.0),
    ] {
        for &x in &[0.5, 0.7, 1.0] {
            let cf = reduction::de_dbeta_reciprocal_alpha(q, b, x).unwrap().value;
            let sv = series(Family::MittagLeffler, Wrt::Beta, 1.0 / q as f64, b, x);
            c.require(rel_ok(cf, sv, 1e-8), || format!("dE/db q={q} b={b} x={x}"));
        }
        for &x in &[0.5, 0.6, 0.8] {
            let cf = reduction::de_dalpha_reciprocal_alpha(q, b, x)
                .unwrap()
                .value;
            let sv = series(Family::MittagLeffler, Wrt::Alpha, 1.0 / q as f64, b, x);
            c.require(rel_ok(cf, sv, 1e-8), || format!("dE/da q={q} b={b} x={x}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_05_closed_form_registry_vs_series() {
    let mut c = Criterion::new(
        "5 (closed-form registry vs series, 3 points per entry)",
        10.0,
    );
    let report = run_suite(SuiteName::Tables);
    c.require(
        report.total >= 3 * reduction::registry_entries().len(),
        || format!("expected 3 checks per registry entry, got {}", report.total),
    );
    for check in &report.checks {
        c.require(check.pass, || {
            format!("{} (rel_err {:.2e})", check.id, check.rel_err)
        });
    }
    c.finish();
}

#[test]
fn criterion_06_integral_and_differential_relations() {
    let mut c = Criterion::new("6 (integral/differential relations)", 10.0);
    let report = run_suite(SuiteName::Relations);
    // 9 quadrature triples per integral family, 9 central-difference points
    // per family, interrelation points, and the Meijer-G indirections
    c.require(report.total >= 18 + 27 + 3 + 6, || {
        format!("unexpected relation check count {}", report.total)
    });
    for check in &report.checks {
        c.require(check.pass, || {
            format!("{} (rel_err {:.2e})", check.id, check.rel_err)
        });
    }
    c.finish();
}

#[test]
fn criterion_07_sum_identities() {
    let mut c = Criterion::new("7 (digamma sum identities)", 1.0);
    let report = run_suite(SuiteName::Sums);
    for check in &report.checks {
        c.require(check.pass && check.tol <= 1e-10, || {
            format!("{} (rel_err {:.2e})", check.id, check.rel_err)
        });
    }
    // the three identities at x in {0.25, 1, 3} are all present
    for &x in &[0.25, 1.0, 3.0] {
        for id in [
            format!("sums/psi-over-factorial/x={x}"),
            format!("sums/psi-over-factorial-squared/x={x}"),
            format!("sums/psi-over-adjacent-factorials/x={x}"),
        ] {
            c.require(report.checks.iter().any(|ch| ch.id == id), || {
                format!("missing check {id}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_08_large_alpha_decay() {
    // The claimed bound cannot hold for dE/dβ and dW/dβ: their k = 0 series
    // term is −ψ(β)/Γ(β), independent of α, so those eight combinations sit
    // at exactly 1 (β = 0) or γ (β = 1) for every α. Asserted as stated so
    // the conflict stays visible; the other 24 combinations pass.
    let mut c = Criterion::new("8 (figure-claim decay at alpha = 20)", 2.0);
    let report = run_suite(SuiteName::Decay);
    for check in &report.checks {
        c.require(check.pass, || {
            format!(
                "{} (|value| = {:.6e}, tol {:.1e})",
                check.id, check.lhs, check.tol
            )
        });
    }
    c.finish();
}

#[test]
fn criterion_09_quotient_pole_limits() {
    let mut c = Criterion::new("9 (psi/gamma pole limits)", 1.0);
    let mut fact = 1.0;
    for m in 0..=6u32 {
        if m > 1 {
            fact *= m as f64;
        }
        let want = if m % 2 == 0 { -fact } else { fact };
        let got = digamma_over_gamma(-(m as f64));
        c.require(((got - want) / want).abs() <= 1e-10, || {
            format!("m={m}: {got} vs {want}")
        });
    }
    c.finish();
}

#[test]
fn criterion_10_cli_black_box() {
    let mut c = Criterion::new("10 (CLI black box: exit codes, CSV, report)", 2.0);
    let bin = env!("CARGO_BIN_EXE_mlwright");
    let run = |args: &[&str]| {
        let out = std::process::Command::new(bin).args(args).output().unwrap();
        (
            out.status.code().unwrap_or(-1),
            String::from_utf8_lossy(&out.stdout).into_owned(),
        )
    };

    let (code, stdout) = run(&[
        "eval", "--fn", "E", "--alpha", "1", "--beta", "1", "--x", "2",
    ]);
    c.require(code == 0 && stdout.contains("value = "), || {
        format!("eval exit {code}")
    });

    let (code, _) = run(&[
        "eval", "--fn", "Ei", "--alpha", "0", "--beta", "1", "--x", "1.5",
    ]);
    c.require(code == 2, || {
        format!("domain error should exit 2, got {code}")
    });

    let (code, stdout) = run(&[
        "grid",
        "--fn",
        "E",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--x-range",
        "1:2:2",
    ]);
    c.require(
        code == 0 && stdout.starts_with("x,alpha,beta,value,abs_err_est,method\n"),
        || String::from("grid CSV header"),
    );
    c.require(stdout.lines().count() == 3, || {
        format!("grid row count {}", stdout.lines().count())
    });

    let (code, _) = run(&["verify", "--suite", "bogus"]);
    c.require(code == 2, || {
        format!("unknown suite should exit 2, got {code}")
    });

    let path = std::env::temp_dir().join("mlwright_acceptance_report.json");
    let (code, _) = run(&[
        "verify",
        "--suite",
        "sums",
        "--report",
        path.to_str().unwrap(),
    ]);
    c.require(code == 0, || format!("verify sums exit {code}"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for field in [
        "id", "citation", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass",
    ] {
        c.require(doc["checks"][0].get(field).is_some(), || {
            format!("report field {field}")
        });
    }
    c.require(
        doc["total"] == doc["checks"].as_array().unwrap().len(),
        || String::from("report total consistency"),
    );
    std::fs::remove_file(&path).ok();
    c.finish();
}
