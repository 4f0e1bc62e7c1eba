//! `mapforge`: censuses, bijection checks and exact series from the command line.
//!
//! Exit codes: 0 pass, 1 counterexample, 2 resource limit, 64 usage error.
//! `MAPFORGE_MAX_NODES` caps the search nodes of rooted-map enumerations.

mod commands;
mod json;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use commands::{CountKind, Format, RunConfig, SeriesName};
use mapforge::oracle_enum::DEFAULT_MAX_NODES;
use mapforge::Error;
use std::process::ExitCode;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "mapforge", version, about = "Bivariate enumeration of rooted maps")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exhaustive census of one family.
    #[command(group = ArgGroup::new("kind").args(["bivariate", "bc4", "good"]))]
    Count {
        #[arg(long)]
        genus: usize,
        /// Edges; vertices with --bc4, interior edges with --good.
        #[arg(long)]
        edges: usize,
        /// Rooted maps by (vertices, faces).
        #[arg(long)]
        bivariate: bool,
        /// 4-valent bicolorable maps by (black faces, white faces).
        #[arg(long)]
        bc4: bool,
        /// Good maps by (black leaves + 1, white leaves).
        #[arg(long)]
        good: bool,
    },
    /// Exhaustive or exact check of one identity.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value_t = 3)]
        edges: usize,
        /// Edge bound for the orientation check.
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Number of genus-2 schemes in the mirror check.
        #[arg(long, default_value_t = 3)]
        sample: usize,
    },
    /// Truncated series dump.
    Series {
        #[arg(value_enum)]
        name: SeriesArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        /// Compare against an independent computation; exit 1 on mismatch.
        #[arg(long)]
        check_oracle: bool,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Check {
    Closure,
    Radial,
    Propp,
    Mirror,
    Shortcut,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SeriesArg {
    #[value(name = "T")]
    T,
    #[value(name = "Tbc")]
    Tbc,
    #[value(name = "D")]
    D,
    #[value(name = "B")]
    B,
    #[value(name = "M1")]
    M1,
}

fn max_nodes() -> Result<u64, String> {
    match std::env::var("MAPFORGE_MAX_NODES") {
        Err(_) => Ok(DEFAULT_MAX_NODES),
        Ok(v) => match v.parse::<u64>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!("MAPFORGE_MAX_NODES must be a positive integer, got {v:?}")),
        },
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::CounterexampleFound(_) => EXIT_COUNTEREXAMPLE,
        _ => EXIT_USAGE,
    }
}

fn run(cli: Cli, cfg: &RunConfig) -> mapforge::Result<(String, bool)> {
    match cli.command {
        Command::Count { genus, edges, bivariate, bc4, good } => {
            let kind = if bivariate {
                CountKind::Bivariate
            } else if bc4 {
                CountKind::Bc4
            } else if good {
                CountKind::Good
            } else {
                CountKind::Edges
            };
            Ok((commands::count(cfg, genus, edges, kind)?, true))
        }
        Command::Verify { check, genus, edges, max_edges, sample } => {
            let report = match check {
                Check::Radial => commands::verify_radial(cfg, genus, edges)?,
                Check::Closure => commands::verify_closure(genus, edges)?,
                Check::Propp => commands::verify_propp_up_to(cfg, max_edges)?,
                Check::Mirror => commands::verify_mirror(genus, sample)?,
                Check::Shortcut => commands::verify_shortcut(genus, edges)?,
            };
            Ok((report.to_json().to_string(), report.passed()))
        }
        Command::Series { name, order, check_oracle } => {
            let name = match name {
                SeriesArg::T => SeriesName::T,
                SeriesArg::Tbc => SeriesName::Tbc,
                SeriesArg::D => SeriesName::D,
                SeriesArg::B => SeriesName::B,
                SeriesArg::M1 => SeriesName::M1,
            };
            commands::series(name, order, check_oracle)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let max_nodes = match max_nodes() {
        Ok(n) => n,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let cfg = RunConfig { format, max_nodes };
    match run(cli, &cfg) {
        Ok((out, passed)) => {
            if out.ends_with('\n') {
                print!("{out}");
            } else {
                println!("{out}");
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_COUNTEREXAMPLE)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
