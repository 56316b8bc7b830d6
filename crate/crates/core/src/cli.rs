//! The `hyperind` command line.
//!
//! Exit codes: 0 on success, 1 on a semantic negative (hypotheses fail,
//! certificate unguaranteed, search budget exhausted), 2 on usage or parse
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use crate::algorithms::{exact_alpha, greedy_extract, ExtractOptions, DEFAULT_BUDGET};
use crate::bounds::{self, bound_table, caro_tuza_rhs, chishti_rhs, rational_string, theorem1_rhs, DEFAULT_TOL};
use crate::error::Error;
use crate::format;
use crate::generators::{generate, Family, InstanceSpec};
use crate::hypergraph::Hypergraph;
use crate::properties::PropertyReport;

/// Largest order for which `compare` runs the exact solver without an explicit budget.
pub const COMPARE_EXACT_MAX_ORDER: usize = 30;

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "HYPERIND_THREADS";

#[derive(Debug, Parser)]
#[command(name = "hyperind", version, about = "Independence-number bounds for uniform linear triangle-free hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report uniformity, linearity, triangle-freeness and double linearity.
    Check { input: PathBuf },
    /// Tabulate the bound functions for d = 0..=d-max.
    BoundsTable {
        #[arg(long = "r", value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        #[arg(long = "d-max")]
        d_max: usize,
        #[arg(long = "m", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive_f64)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Greedy independent set with its step-by-step certificate.
    Extract {
        input: PathBuf,
        #[arg(long = "r", value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        /// Run even when the hypotheses fail; the certificate is then unguaranteed.
        #[arg(long = "unsafe")]
        allow_violations: bool,
        /// Recompute every chosen step from scratch.
        #[arg(long)]
        cross_check: bool,
    },
    /// Exact independence number by branch and bound.
    Exact {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Generate an instance in `.hg` format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count; 0 means the exact order a named family needs.
        #[arg(long = "n", default_value_t = 0)]
        n: usize,
        #[arg(long = "r", default_value_t = 3)]
        r: usize,
        /// Target edge count (the edge count itself for named families).
        #[arg(long = "m", default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write the instance spec as JSON.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// All bounds, the greedy size and the exact value side by side.
    Compare {
        input: PathBuf,
        #[arg(long = "r", value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        /// Node budget for the exact solver; setting it enables the solver at any order.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive_f64)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

/// A failed command: message for stderr plus exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::HypothesisViolated(_) => 1,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(2, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read_input(path: &Path) -> Result<Hypergraph, Failure> {
    format::read_file(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn check(out: &mut dyn Write, input: &Path) -> Outcome {
    let h = read_input(input)?;
    let report = PropertyReport::of(&h);
    writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?;
    Ok(if report.satisfies_hypotheses() { 0 } else { 1 })
}

fn table(out: &mut dyn Write, r: usize, d_max: usize, m: u32, tol: f64, fmt: TableFormat) -> Outcome {
    let rows = bound_table(r, d_max, m, tol)?;
    match fmt {
        TableFormat::Csv => write!(out, "{}", bounds::table::to_csv(&rows))?,
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&bounds::table::to_json(&rows)).unwrap())?,
    }
    Ok(0)
}

fn extract(out: &mut dyn Write, input: &Path, r: usize, opts: ExtractOptions) -> Outcome {
    let h = read_input(input)?;
    let cert = greedy_extract(&h, r, opts).map_err(|e| match e {
        Error::HypothesisViolated(_) => Failure(1, format!("{e}; pass --unsafe to extract anyway")),
        e => e.into(),
    })?;
    writeln!(out, "{}", cert.to_json())?;
    Ok(if cert.guaranteed { 0 } else { 1 })
}

fn exact(out: &mut dyn Write, input: &Path, budget: u64, fmt: ReportFormat) -> Outcome {
    let h = read_input(input)?;
    let res = exact_alpha(&h, budget);
    match fmt {
        ReportFormat::Json => {
            let v = json!({ "alpha": res.alpha, "exact": res.exact, "nodes": res.nodes, "set": res.set });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
        }
        ReportFormat::Text => {
            let set: Vec<String> = res.set.iter().map(ToString::to_string).collect();
            let rel = if res.exact { "=" } else { ">=" };
            writeln!(out, "alpha{rel}{} set={}", res.alpha, set.join(","))?;
        }
    }
    Ok(if res.exact { 0 } else { 1 })
}

fn gen(out: &mut dyn Write, err: &mut dyn Write, spec: InstanceSpec, output: Option<&Path>, sidecar: Option<&Path>) -> Outcome {
    let g = generate(&spec)?;
    if g.underfilled {
        writeln!(
            err,
            "warning: stopped after {} of {} edges (rejection cap reached)",
            g.hypergraph.size(),
            spec.m_target
        )?;
    }
    let text = format::write(&g.hypergraph);
    match output {
        Some(path) => std::fs::write(path, &text)?,
        None => write!(out, "{text}")?,
    }
    if let Some(path) = sidecar {
        let v = json!({
            "spec": spec,
            "order": g.hypergraph.order(),
            "size": g.hypergraph.size(),
            "underfilled": g.underfilled,
        });
        std::fs::write(path, serde_json::to_string_pretty(&v).unwrap() + "\n")?;
    }
    Ok(0)
}

fn compare(out: &mut dyn Write, input: &Path, r: usize, budget: Option<u64>, tol: f64, fmt: ReportFormat) -> Outcome {
    let h = read_input(input)?;
    let rhs = theorem1_rhs(&h, r)?;
    let ct = caro_tuza_rhs(&h, r)?;
    let czpi = match chishti_rhs(&h, r, tol) {
        Ok(e) => Some(e),
        Err(Error::EmptyHypergraph) => None,
        Err(e) => return Err(e.into()),
    };
    let cert = greedy_extract(&h, r, ExtractOptions { allow_violations: true, cross_check: false })?;
    let alpha = match budget {
        Some(b) => Some(exact_alpha(&h, b)),
        None if h.order() <= COMPARE_EXACT_MAX_ORDER => Some(exact_alpha(&h, DEFAULT_BUDGET)),
        None => None,
    };
    let f = |q: &num_rational::BigRational| q.to_f64().unwrap_or(f64::NAN);
    match fmt {
        ReportFormat::Json => {
            let v = json!({
                "theorem1_rhs": { "value": rational_string(&rhs), "approx": f(&rhs), "provenance": "exact" },
                "caro_tuza_rhs": { "value": rational_string(&ct), "approx": f(&ct), "provenance": "exact" },
                "chishti_rhs": czpi.map(|e| json!({ "value": e.value, "error": e.error, "provenance": "quadrature" })),
                "greedy": {
                    "size": cert.size(),
                    "provenance": if cert.guaranteed { "certified" } else { "unguaranteed" },
                },
                "exact_alpha": alpha.as_ref().map(|a| json!({
                    "value": a.alpha,
                    "provenance": if a.exact { "branch-and-bound" } else { "budget exhausted, lower bound" },
                })),
            });
            writeln!(out, "{}", serde_json::to_string(&v).unwrap())?;
        }
        ReportFormat::Text => {
            let czpi = czpi.map_or("n/a".to_string(), |e| format!("{:.6} [quadrature]", e.value));
            let alpha = match &alpha {
                None => "n/a".to_string(),
                Some(a) if a.exact => format!("{} [branch-and-bound]", a.alpha),
                Some(a) => format!(">={} [budget exhausted]", a.alpha),
            };
            writeln!(
                out,
                "theorem1_rhs={} ~{:.6} [exact]\tcaro_tuza={} ~{:.6} [exact]\tchishti_rhs={}\tgreedy={} [{}]\texact_alpha={}",
                rational_string(&rhs),
                f(&rhs),
                rational_string(&ct),
                f(&ct),
                czpi,
                cert.size(),
                if cert.guaranteed { "certified" } else { "unguaranteed" },
                alpha,
            )?;
        }
    }
    Ok(0)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Check { input } => check(out, &input),
        Command::BoundsTable { r, d_max, m, tol, format } => table(out, r as usize, d_max, m, tol, format),
        Command::Extract { input, r, allow_violations, cross_check } => {
            extract(out, &input, r as usize, ExtractOptions { allow_violations, cross_check })
        }
        Command::Exact { input, budget, format } => exact(out, &input, budget, format),
        Command::Gen { family, n, r, m, seed, output, sidecar } => gen(
            out,
            err,
            InstanceSpec { family, n, r, m_target: m, seed },
            output.as_deref(),
            sidecar.as_deref(),
        ),
        Command::Compare { input, r, budget, tol, format } => compare(out, &input, r as usize, budget, tol, format),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Sizes the global rayon pool from `HYPERIND_THREADS` when it is set.
pub fn init_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
