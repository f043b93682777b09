use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use picchi_core::formulas::{self, Kind};
use picchi_core::plaurent::Format;
use picchi_core::verify::{run_suite, Suite};
use picchi_core::TruncatedSymFunc;

/// Exact Euler characteristics of universal Picard stacks.
#[derive(Parser)]
#[command(name = "picchi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight-zero generating function.
    Wt0 {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Print the topological generating function.
    Top {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Print `n` and the Euler characteristic of the n-pointed stack, one row per n.
    Chi {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_n: u32,
    },
    /// Run a verification suite; the exit status is nonzero iff a check fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        depth: u32,
    },
    /// Print the equivariant Euler characteristic in the power-sum basis.
    Equivariant {
        #[arg(long, value_parser = parse_genus)]
        g: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Latex,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Latex => Format::Latex,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "weight0")]
    Wt0,
    Top,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Wt0 => Kind::WeightZero,
            KindArg::Top => Kind::Topological,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Properties,
    Ncount,
    Bounds,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Properties => Suite::Properties,
            SuiteArg::Ncount => Suite::Ncount,
            SuiteArg::Bounds => Suite::Bounds,
        }
    }
}

fn parse_genus(s: &str) -> std::result::Result<u32, String> {
    let g: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if g < 2 {
        return Err(format!("genus must satisfy g >= 2 (got {g})"));
    }
    Ok(g)
}

fn render_symfunc(f: &TruncatedSymFunc, format: Format) -> String {
    match format {
        Format::Text => f.to_string(),
        Format::Latex => f.to_latex(),
        // A degree-zero class is a plain number.
        Format::Json if f.terms().all(|(m, _)| m.is_one()) => {
            serde_json::Value::String(f.constant_term().to_string()).to_string()
        }
        Format::Json => f.to_json().to_string(),
    }
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Wt0 { g, format } => {
            println!("{}", formulas::weight_zero_jacobian(g)?.render(format.into()));
        }
        Command::Top { g, format } => {
            println!("{}", formulas::topological_jacobian(g)?.render(format.into()));
        }
        Command::Chi { g, kind, max_n } => {
            for (n, chi) in formulas::chi_series(g, kind.into(), max_n)?.iter().enumerate() {
                println!("{n}\t{chi}");
            }
        }
        Command::Verify { suite, seed, depth } => {
            let report = run_suite(suite.into(), seed, depth);
            println!("{report}");
            if !report.all_passed() {
                for c in report.failures() {
                    eprintln!("failed: {}", c.id);
                }
                return Ok(false);
            }
        }
        Command::Equivariant { g, kind, n, format } => {
            let f = formulas::equivariant_chi(g, kind.into(), n)?;
            println!("{}", render_symfunc(&f, format.into()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
