use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zetafib::catalog::{catalog_entries, ParamSet};
use zetafib::harness::{
    self, sweep, verify_one, write_report, ReportFormat, ResultRecord, Summary, SweepConfig,
    DEFAULT_TOLERANCE, PRECISION_ENV,
};
use zetafib::mpreal::{const_pi, const_sqrt5, golden_alpha, golden_beta, to_decimal};
use zetafib::specfun::{euler_gamma, zeta_int};
use zetafib::{Precision, Result};

#[derive(Parser)]
#[command(name = "zetafib", version, about = "Certified checks of zeta/Fibonacci/Lucas series identities")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the identity catalog as JSON.
    List,
    /// Verify a single identity at one parameter point.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[command(flatten)]
        num: Numeric,
    },
    /// Sweep identities over parameter ranges and write a report.
    Sweep {
        /// Comma-separated identity ids (default: all).
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        /// Inclusive range `lo..hi`.
        #[arg(long, value_parser = parse_range, default_value = "0..8")]
        m: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range, default_value = "1..10")]
        n: RangeInclusive<i64>,
        #[command(flatten)]
        num: Numeric,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print reference constants.
    Constants {
        #[arg(long, env = PRECISION_ENV, default_value_t = harness::DEFAULT_PRECISION_BITS)]
        prec: u32,
    },
}

#[derive(clap::Args)]
struct Numeric {
    /// Target precision in bits.
    #[arg(long, env = PRECISION_ENV, default_value_t = harness::DEFAULT_PRECISION_BITS)]
    prec: u32,
    /// Absolute tolerance.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected `lo..hi`, got `{s}`");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct ListItem {
    id: &'static str,
    title: &'static str,
    domain_description: &'static str,
    paper_ref: &'static str,
}

fn exit_for(summary: &Summary) -> ExitCode {
    if summary.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List => {
            let items: Vec<_> = catalog_entries()
                .iter()
                .map(|e| ListItem {
                    id: e.id,
                    title: e.title,
                    domain_description: e.domain_description,
                    paper_ref: e.paper_ref,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { id, m, n, num } => {
            let cfg = SweepConfig {
                precision_bits: num.prec,
                tolerance: num.tol,
                jobs: cli.jobs,
                ..SweepConfig::default()
            };
            let r = verify_one(&id, &ParamSet { m, n }, &cfg)?;
            let record = ResultRecord::from(&r);
            println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
            Ok(exit_for(&Summary::of(std::slice::from_ref(&r))))
        }
        Command::Sweep { ids, m, n, num, out, format } => {
            let cfg = SweepConfig {
                ids,
                m_range: m,
                n_range: n,
                precision_bits: num.prec,
                tolerance: num.tol,
                jobs: cli.jobs,
                ..SweepConfig::default()
            };
            let results = sweep(&cfg)?;
            write_report(&results, format.into(), &out)?;
            let summary = Summary::of(&results);
            println!("{}", serde_json::to_string(&summary).expect("serializable"));
            Ok(exit_for(&summary))
        }
        Command::Constants { prec } => {
            let p = Precision::try_new(prec, 0)?;
            let digits = (prec as f64 * std::f64::consts::LOG10_2).floor() as usize;
            let rows = [
                ("gamma", euler_gamma(p)),
                ("pi", const_pi(p)),
                ("sqrt5", const_sqrt5(p)),
                ("alpha", golden_alpha(p)),
                ("beta", golden_beta(p)),
                ("zeta(2)", zeta_int(2, p)),
                ("zeta(3)", zeta_int(3, p)),
            ];
            for (name, v) in rows {
                println!("{name:<8} {}", to_decimal(&v, digits));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

