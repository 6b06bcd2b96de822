mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use centra_core::catalog::Catalog;
use centra_core::theorems::{self, conjecture_experiment, run_suite_with, DEFAULT_ORDER_CAP};
use centra_core::{cent_profile, parse_spec, CentProfile, SuiteConfig};
use clap::{Parser, Subcommand, ValueEnum};

use render::Format;

#[derive(Debug, Parser)]
#[command(name = "centra", version, about = "Centralizer invariants of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Largest group order to construct or check.
    #[arg(long, global = true, env = "CENTRA_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP, value_parser = parse_order_cap)]
    order_cap: usize,

    /// Worker threads for verification (defaults to the number of cores).
    #[arg(long, global = true, value_parser = parse_jobs)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the invariant profile of each group spec, e.g. "D(10)" or "prod(S(3),C(2))".
    Compute {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Check the counting theorems against the catalog.
    Verify {
        /// Comma-separated theorem ids (default: all).
        #[arg(long, value_delimiter = ',')]
        theorems: Option<Vec<String>>,
        /// Comma-separated catalog names to restrict to (default: whole catalog).
        #[arg(long, value_delimiter = ',')]
        groups: Option<Vec<String>>,
        /// Print the theorem ids with their statements and exit.
        #[arg(long)]
        list: bool,
    },
    /// Compare |2-Cent| across the non-abelian simple groups of the catalog.
    Experiment,
    /// List the built-in catalog.
    Catalog,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
        }
    }
}

fn parse_order_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(n) => Err(format!("must be at least 2, got {n}")),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_string()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// A failure that ends the run with exit status 2.
#[derive(Debug)]
struct UsageError(String);

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILURES),
        Err(UsageError(msg)) => {
            eprintln!("centra: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// Runs the command; `Ok(false)` means the report contains failures.
fn run(cli: &Cli) -> Result<bool, UsageError> {
    let format = Format::from(cli.format);
    let (text, ok) = match &cli.command {
        Command::Compute { specs } => (render::profiles(&compute(specs, cli.order_cap)?, format), true),
        Command::Verify { list: true, .. } => (render::theorem_list(theorems::theorems(), format), true),
        Command::Verify { theorems, groups, list: false } => {
            let config = SuiteConfig {
                theorem_ids: theorems.clone(),
                catalog_subset: groups.clone(),
                order_cap: cli.order_cap,
                jobs: cli.jobs.unwrap_or(SuiteConfig::default().jobs),
            };
            let reports = run_suite_with(&Catalog::default(), &config).map_err(|e| UsageError(e.to_string()))?;
            let failed: usize = reports.iter().map(|r| r.failed).sum();
            let failing = reports.iter().filter(|r| !r.is_success()).count();
            eprintln!("{} theorems checked, {failed} failed instances across {failing} theorems", reports.len());
            (render::reports(&reports, format), failing == 0)
        }
        Command::Experiment => {
            let report = conjecture_experiment(&Catalog::default(), cli.order_cap);
            (render::experiment(&report, format), true)
        }
        Command::Catalog => (render::catalog(&Catalog::default().rows(), format), true),
    };
    emit(cli.output.as_ref(), &text)?;
    Ok(ok)
}

fn compute(specs: &[String], order_cap: usize) -> Result<Vec<CentProfile>, UsageError> {
    specs
        .iter()
        .map(|text| {
            let fail = |msg: String| UsageError(format!("spec {text:?}: {msg}"));
            let spec = parse_spec(text).map_err(|e| fail(e.to_string()))?;
            let too_big = |order: usize| fail(format!("order {order} exceeds the order cap {order_cap}"));
            if let Some(order) = spec.expected_order().filter(|&n| n > order_cap) {
                return Err(too_big(order));
            }
            let g = spec.build().map_err(|e| fail(e.to_string()))?;
            if g.order() > order_cap {
                return Err(too_big(g.order()));
            }
            cent_profile(&g, &spec.to_string()).map_err(|e| fail(e.to_string()))
        })
        .collect()
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), UsageError> {
    let result = match path {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| format!("cannot write to stdout: {e}")),
    };
    result.map_err(UsageError)
}
