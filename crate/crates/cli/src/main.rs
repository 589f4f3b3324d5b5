use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::Render;

/// Environment variable capping the worker thread count.
const THREADS_ENV: &str = "WPS_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "wps",
    version,
    about = "Weighted projective spaces over finite fields"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized suites; echoed in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on candidate polynomials or codewords for exhaustive searches.
    #[arg(long, global = true, default_value_t = wps_core::search::SEARCH_BUDGET, value_parser = positive)]
    budget: u128,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn positive(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the rational points of P(a) over F_q.
    Points(commands::PointsArgs),
    /// Count the projective zeros of a weighted homogeneous polynomial.
    CountZeros(commands::CountZerosArgs),
    /// Exhaustive search for the maximum number of zeros in degree d.
    EqSearch(commands::EqSearchArgs),
    /// Build one extremal family member and compare its count with the closed form.
    Family(commands::FamilyArgs),
    /// Lines of the weighted plane P(1,a1,a2).
    Lines(commands::LinesArgs),
    /// Parameters of an RM, PRM or WPRM code.
    Code(commands::CodeArgs),
    /// Parameter comparison of RM, PRM and WPRM codes in the plane.
    Table(commands::TableArgs),
    /// Run verification suites.
    Verify(commands::VerifyArgs),
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .with_context(|| format!("{THREADS_ENV}={v:?} is not a thread count"))?;
        if n == 0 {
            bail!("{THREADS_ENV} must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    configure_threads()?;
    let c = &cli.common;
    let report: Box<dyn Render> = match &cli.command {
        Command::Points(a) => Box::new(commands::points(a, c)?),
        Command::CountZeros(a) => Box::new(commands::count_zeros(a, c)?),
        Command::EqSearch(a) => Box::new(commands::eq_search(a, c)?),
        Command::Family(a) => Box::new(commands::family(a, c)?),
        Command::Lines(a) => Box::new(commands::lines(a, c)?),
        Command::Code(a) => Box::new(commands::code(a, c)?),
        Command::Table(a) => Box::new(commands::table(a, c)?),
        Command::Verify(a) => Box::new(commands::verify(a, c)?),
    };
    let text = match c.format {
        Format::Json => report.json()?,
        Format::Csv => report.csv()?,
        Format::Text => report.text(),
    };
    match &c.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
