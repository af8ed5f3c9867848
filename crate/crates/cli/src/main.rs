//! `mlwright` — evaluate Mittag-Leffler/Wright functions and their
//! parameter derivatives, export grids as CSV, and run the validation
//! suites.
//!
//! Exit codes: 0 success, 1 validation failures, 2 flag/domain errors.

mod grid;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mlwright::deriv::{DerivTarget, Wrt};
use mlwright::reduction::registry_lookup;
use mlwright::series::{eval_family, EvalOptions, Family, MethodPolicy, Params};
use mlwright::{param_derivative, Evaluation, SuiteName};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mlwright",
    version,
    about = "Mittag-Leffler / Wright function evaluator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function or parameter derivative at a point
    Eval(EvalArgs),
    /// Export a CSV grid of values over x (and optionally alpha)
    Grid(grid::GridArgs),
    /// Run validation suites and optionally write a JSON report
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FnName {
    #[value(name = "E")]
    E,
    #[value(name = "W")]
    W,
    #[value(name = "Ei")]
    Ei,
    #[value(name = "Wi")]
    Wi,
}

impl FnName {
    pub fn family(self) -> Family {
        match self {
            FnName::E => Family::MittagLeffler,
            FnName::W => Family::Wright,
            FnName::Ei => Family::IntegralMl,
            FnName::Wi => Family::IntegralWright,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum WrtArg {
    None,
    Alpha,
    Beta,
}

impl WrtArg {
    pub fn wrt(self) -> Option<Wrt> {
        match self {
            WrtArg::None => None,
            WrtArg::Alpha => Some(Wrt::Alpha),
            WrtArg::Beta => Some(Wrt::Beta),
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum MethodArg {
    Auto,
    Series,
    Closed,
    Quadrature,
}

impl MethodArg {
    fn policy(self) -> MethodPolicy {
        match self {
            MethodArg::Auto => MethodPolicy::Auto,
            MethodArg::Series => MethodPolicy::Series,
            MethodArg::Closed => MethodPolicy::ClosedForm,
            MethodArg::Quadrature => MethodPolicy::Quadrature,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Function family
    #[arg(long = "fn", value_enum)]
    function: FnName,
    /// Differentiate with respect to a parameter
    #[arg(long, value_enum, default_value = "none")]
    wrt: WrtArg,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Relative stopping tolerance for series
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Relations,
    Theorems,
    Tables,
    Sums,
    Decay,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Write the machine-readable report here
    #[arg(long)]
    report: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => cmd_eval(&args),
        Command::Grid(args) => grid::cmd_grid(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

/// Evaluate the requested point under the method policy; returns the
/// evaluation and the citation when a closed form produced it.
pub fn evaluate_point(
    family: Family,
    wrt: Option<Wrt>,
    alpha: f64,
    beta: f64,
    x: f64,
    tol: f64,
    method: MethodArg,
) -> Result<(Evaluation, Option<&'static str>), mlwright::EvalError> {
    let params = Params::new(family, alpha, beta)?;
    let opts = EvalOptions {
        tol,
        ..EvalOptions::default()
    };
    match wrt {
        None => {
            let opts = EvalOptions {
                method: method.policy(),
                ..opts
            };
            Ok((eval_family(&params, x, &opts)?, None))
        }
        Some(wrt) => {
            params.check_x(x)?;
            let target = DerivTarget { family, wrt };
            let closed = || -> Result<(Evaluation, Option<&'static str>), mlwright::EvalError> {
                let entry = registry_lookup(family, wrt, alpha, beta)
                    .ok_or(mlwright::EvalError::UnknownKey)?;
                Ok((entry.evaluate(beta, x)?, Some(entry.citation)))
            };
            match method {
                MethodArg::Closed => closed(),
                MethodArg::Series => Ok((param_derivative(target, &params, x, &opts)?, None)),
                MethodArg::Auto => {
                    // prefer an exactly matching closed form, else series
                    match closed() {
                        Ok(hit) => Ok(hit),
                        Err(_) => Ok((param_derivative(target, &params, x, &opts)?, None)),
                    }
                }
                MethodArg::Quadrature => Err(mlwright::EvalError::Domain(
                    "quadrature method applies to the integral base functions only",
                )),
            }
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> ExitCode {
    if !(args.tol > 0.0 && args.tol < 1.0) {
        eprintln!("error: --tol must lie in (0, 1)");
        return ExitCode::from(2);
    }
    match evaluate_point(
        args.function.family(),
        args.wrt.wrt(),
        args.alpha,
        args.beta,
        args.x,
        args.tol,
        args.method,
    ) {
        Ok((eval, citation)) => {
            println!("value = {}", report::fmt17(eval.value));
            println!("abs_err_est = {:e}", eval.abs_err_est);
            println!("terms = {}", eval.terms_used);
            println!("method = {}", eval.method.label());
            if let Some(c) = citation {
                println!("citation = {c}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let suites: &[SuiteName] = match args.suite {
        SuiteArg::Relations => &[SuiteName::Relations],
        SuiteArg::Theorems => &[SuiteName::Theorems],
        SuiteArg::Tables => &[SuiteName::Tables],
        SuiteArg::Sums => &[SuiteName::Sums],
        SuiteArg::Decay => &[SuiteName::Decay],
        SuiteArg::All => &SuiteName::ALL,
    };
    let started = std::time::Instant::now();
    let mut all_checks = Vec::new();
    for &s in suites {
        let rep = mlwright::run_suite(s);
        println!(
            "suite {:<9} total {:>3}  passed {:>3}  failed {:>3}",
            rep.suite, rep.total, rep.passed, rep.failed
        );
        for c in rep.checks.iter().filter(|c| !c.pass) {
            println!(
                "  FAIL {} (lhs {} rhs {} rel_err {:.3e} tol {:.1e})",
                c.id,
                report::fmt17(c.lhs),
                report::fmt17(c.rhs),
                c.rel_err,
                c.tol
            );
        }
        all_checks.extend(rep.checks);
    }
    let label = match args.suite {
        SuiteArg::All => "all",
        _ => suites[0].label(),
    };
    let merged = mlwright::ValidationReport::from_checks(label, all_checks);
    let ok = merged.all_passed();
    if let Some(path) = &args.report {
        let doc = report::ReportDocument::new(&merged, started.elapsed());
        match doc.write(path) {
            Ok(()) => println!("report written to {}", path.display()),
            Err(e) => {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
        }
    }
    println!(
        "verify {}: {}/{} checks passed",
        label, merged.passed, merged.total
    );
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
