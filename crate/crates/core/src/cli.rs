//! Command-line front end. [`run`] is the whole program minus the process
//! boundary: it returns the exit code and both output streams.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::cones::dual_cone;
use crate::error::Error;
use crate::hilbpoly::hilb_poly;
use crate::hilbscheme::{
    classify, nef_report, pairing_matrix, verify_grid, ComponentName, HilbParams,
};
use crate::schubring::{multiply, RingContext, SchubertExpansion};
use crate::{Partition, QPolynomial, RationalCone};

#[derive(Parser, Debug)]
#[command(
    name = "hilbnef",
    version,
    about = "Schubert calculus and Nef cones of Hilbert schemes of hypersurfaces in G(k,n)"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct HilbArgs {
    /// Degree of the hypersurfaces
    #[arg(long)]
    d: usize,
    /// Dimension of the linear span P^m
    #[arg(long)]
    m: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

impl HilbArgs {
    fn params(&self) -> Result<HilbParams, Error> {
        HilbParams::new(self.d, self.m, self.k, self.n)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Components of the Hilbert scheme
    Classify(HilbArgs),
    /// Nef cone generators of the Hilbert scheme
    Nef(HilbArgs),
    /// Divisor/curve pairing table of one component
    Pairing {
        #[command(flatten)]
        params: HilbArgs,
        #[arg(long)]
        component: ComponentName,
    },
    /// Product of two Schubert classes in G(k,n)
    Mult {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Comma-separated parts, e.g. 2,1
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Hilbert polynomial of a degree-d hypersurface in P^m
    Hilbpoly {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
    },
    /// Dual of a cone read from a JSON file
    ConesDual {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check every parameter tuple up to the given bounds
    Verify {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        dmax: usize,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(rendered)
                }
                _ => {
                    let line = rendered.lines().next().unwrap_or("invalid arguments");
                    Outcome::invalid(line.trim_start_matches("error: "))
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::invalid(e),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Classify(args) => {
            let params = args.params()?;
            let components = classify(&params);
            if text {
                let mut s = String::new();
                if components.is_empty() {
                    s.push_str("empty\n");
                }
                for c in &components {
                    s.push_str(&format!(
                        "{}: {} over {}, class σ{}, NS rank {}, generators {}\n",
                        c.name,
                        c.bundle,
                        c.flag,
                        c.family_class,
                        c.ns_rank,
                        c.generators.join(",")
                    ));
                }
                Ok(Outcome::ok(s))
            } else {
                Ok(Outcome::ok(to_json(&json!({
                    "params": params,
                    "components": components,
                }))))
            }
        }
        Command::Nef(args) => {
            let report = nef_report(&args.params()?)?;
            if text {
                Ok(Outcome::ok(format!(
                    "case {}: {} generators {}\n{}\n",
                    report.case.as_str(),
                    report.generator_labels.len(),
                    report.generator_labels.join(", "),
                    report.cone
                )))
            } else {
                Ok(Outcome::ok(to_json(&report)))
            }
        }
        Command::Pairing { params, component } => {
            let params = params.params()?;
            let c = classify(&params)
                .into_iter()
                .find(|c| c.name == *component)
                .ok_or_else(|| {
                    Error::Parse(format!(
                        "component {component} does not exist for d={} m={} k={} n={}",
                        params.d, params.m, params.k, params.n
                    ))
                })?;
            let pairing = pairing_matrix(&c);
            if text {
                let mut s = format!("{} over {}\n", c.name, c.flag);
                s.push_str(&format!("\t{}\n", pairing.curve_labels().join("\t")));
                for (label, row) in pairing.divisor_labels().iter().zip(pairing.entries()) {
                    let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                    s.push_str(&format!("{label}\t{}\n", cells.join("\t")));
                }
                Ok(Outcome::ok(s))
            } else {
                Ok(Outcome::ok(to_json(&json!({
                    "component": c.name,
                    "flag": c.flag,
                    "curves": c.curves,
                    "pairing": pairing,
                }))))
            }
        }
        Command::Mult { k, n, lhs, rhs } => {
            let ctx = RingContext::new(*k, *n)?;
            let a = ctx.sigma(&lhs.parse::<Partition>()?)?;
            let b = ctx.sigma(&rhs.parse::<Partition>()?)?;
            let product: SchubertExpansion = multiply(&ctx, &a, &b)?;
            if text {
                Ok(Outcome::ok(format!("{product}\n")))
            } else {
                Ok(Outcome::ok(to_json(&product)))
            }
        }
        Command::Hilbpoly { d, m, eval } => {
            if *d == 0 || *m == 0 {
                return Err(Error::OutOfRange {
                    what: if *d == 0 { "d" } else { "m" },
                    value: 0,
                    range: ">= 1".into(),
                });
            }
            let poly: QPolynomial = hilb_poly(*d, *m);
            let value: Option<BigRational> = eval.map(|t| poly.eval_int(t));
            if text {
                let mut s = format!("P(T) = {poly}\n");
                if let (Some(t), Some(v)) = (eval, &value) {
                    s.push_str(&format!("P({t}) = {v}\n"));
                }
                Ok(Outcome::ok(s))
            } else {
                let mut out = json!({ "d": d, "m": m, "polynomial": poly });
                if let (Some(t), Some(v)) = (eval, &value) {
                    out["eval"] = json!({
                        "T": t,
                        "value": [v.numer().to_string(), v.denom().to_string()],
                    });
                }
                Ok(Outcome::ok(to_json(&out)))
            }
        }
        Command::ConesDual { file } => {
            let raw = std::fs::read_to_string(file)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
            let cone: RationalCone = serde_json::from_str(&raw)
                .map_err(|e| Error::Parse(format!("invalid cone JSON: {e}")))?;
            let dual = dual_cone(&cone)?;
            if text {
                Ok(Outcome::ok(format!("{dual}\n")))
            } else {
                Ok(Outcome::ok(to_json(&dual)))
            }
        }
        Command::Verify { kmax, nmax, dmax } => {
            for (what, value, min) in [("kmax", *kmax, 2), ("nmax", *nmax, 4), ("dmax", *dmax, 3)] {
                if value < min {
                    return Err(Error::OutOfRange {
                        what,
                        value: value as i64,
                        range: format!(">= {min}"),
                    });
                }
            }
            let reports = verify_grid(*kmax, *nmax, *dmax);
            let checks: usize = reports
                .iter()
                .map(|r| r.nef.len() + r.components.iter().map(|c| c.checks.len()).sum::<usize>())
                .sum();
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            let stdout = if text {
                let mut s = format!(
                    "verified {} parameter tuples, {checks} checks, {} failures\n",
                    reports.len(),
                    failed.len()
                );
                for r in &failed {
                    let p = r.params;
                    s.push_str(&format!("FAIL d={} m={} k={} n={}\n", p.d, p.m, p.k, p.n));
                }
                s
            } else {
                to_json(&json!({
                    "grid": { "kmax": kmax, "nmax": nmax, "dmax": dmax },
                    "points": reports.len(),
                    "checks": checks,
                    "failures": failed,
                }))
            };
            Ok(Outcome {
                code: if failed.is_empty() { 0 } else { 1 },
                stdout,
                stderr: if failed.is_empty() {
                    String::new()
                } else {
                    format!(
                        "error: {} parameter tuples failed verification\n",
                        failed.len()
                    )
                },
            })
        }
    }
}
