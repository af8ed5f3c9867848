//! CSV grid export: `x,alpha,beta,value,abs_err_est,method`, values at 17
//! significant digits, rows in row-major order (alpha outer, x inner).

use crate::{evaluate_point, FnName, MethodArg, WrtArg};
use clap::Args;
use mlwright::series::Params;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

/// lo:hi:count sampling specification.
#[derive(Clone, Copy, Debug)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl Range {
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let step = (self.hi - self.lo) / (self.count - 1) as f64;
        (0..self.count).map(move |i| self.lo + step * i as f64)
    }

    fn validate(&self) -> Result<(), String> {
        // negated form also rejects NaN bounds
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.lo < self.hi) {
            return Err(format!(
                "empty range: lo {} must be below hi {}",
                self.lo, self.hi
            ));
        }
        if self.count < 2 {
            return Err(format!("range needs at least 2 points, got {}", self.count));
        }
        Ok(())
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(String::from("expected LO:HI:COUNT"));
        }
        let lo = parts[0].parse().map_err(|e| format!("bad lo: {e}"))?;
        let hi = parts[1].parse().map_err(|e| format!("bad hi: {e}"))?;
        let count = parts[2].parse().map_err(|e| format!("bad count: {e}"))?;
        Ok(Range { lo, hi, count })
    }
}

#[derive(Args)]
pub struct GridArgs {
    #[arg(long = "fn", value_enum)]
    function: FnName,
    #[arg(long, value_enum, default_value = "none")]
    wrt: WrtArg,
    /// Fixed alpha; omit to sweep the alpha range instead
    #[arg(long, allow_hyphen_values = true, conflicts_with = "alpha_range")]
    alpha: Option<f64>,
    /// alpha sweep as LO:HI:COUNT
    #[arg(long, default_value = "0.1:5:50")]
    alpha_range: Range,
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    /// x sweep as LO:HI:COUNT
    #[arg(long, default_value = "0.05:5:100")]
    x_range: Range,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

pub fn cmd_grid(args: &GridArgs) -> ExitCode {
    let alphas: Vec<f64> = match args.alpha {
        Some(a) => vec![a],
        None => {
            if let Err(e) = args.alpha_range.validate() {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            args.alpha_range.points().collect()
        }
    };
    if let Err(e) = args.x_range.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    // every sample point must be in-domain for the family
    let family = args.function.family();
    for &a in &alphas {
        let p = match Params::new(family, a, args.beta) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: alpha={a}: {e}");
                return ExitCode::from(2);
            }
        };
        for x in args.x_range.points() {
            if let Err(e) = p.check_x(x) {
                eprintln!("error: alpha={a} x={x}: {e}");
                return ExitCode::from(2);
            }
        }
    }

    let mut body = String::from("x,alpha,beta,value,abs_err_est,method\n");
    for &a in &alphas {
        for x in args.x_range.points() {
            let row =
                match evaluate_point(family, args.wrt.wrt(), a, args.beta, x, 1e-15, args.method) {
                    Ok((e, _)) => format!(
                        "{},{},{},{},{:e},{}\n",
                        crate::report::fmt17(x),
                        crate::report::fmt17(a),
                        crate::report::fmt17(args.beta),
                        crate::report::fmt17(e.value),
                        e.abs_err_est,
                        e.method.label()
                    ),
                    // magnitude beyond f64 (or a failed summation) at a valid
                    // point: emit a NaN row rather than aborting the export
                    Err(_) => format!(
                        "{},{},{},NaN,inf,series\n",
                        crate::report::fmt17(x),
                        crate::report::fmt17(a),
                        crate::report::fmt17(args.beta),
                    ),
                };
            body.push_str(&row);
        }
    }

    match &args.out {
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(body.as_bytes())) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(2)
                }
            }
        }
        None => {
            print!("{body}");
            ExitCode::SUCCESS
        }
    }
}
