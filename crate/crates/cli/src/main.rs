//! `regwide`: classify regular subalgebras from the command line.
//!
//! Reports are JSON on stdout. Exit status is 0 on success, 1 when a
//! verification check fails, 2 for malformed input and 3 when a resource cap
//! is hit.

mod commands;
mod input;
mod store;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regwide::{CartanMode, TypeLetter};

#[derive(Parser)]
#[command(name = "regwide", version, about = "Wide and narrow regular subalgebras, decided exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a root system as canonical JSON.
    Rootsys(SystemArgs),
    /// Classify one closed subset.
    Classify(ClassifyArgs),
    /// Classify every closed subset, grouped by Weyl orbit.
    Census(CensusArgs),
    /// Enumerate the FFLV multi-exponents of V(λ) in type A.
    Fflv(FflvArgs),
}

#[derive(Args, Clone)]
pub struct SystemArgs {
    /// Type letter: A, B, C, D, F or G.
    #[arg(long = "type", value_name = "LETTER")]
    pub type_letter: TypeLetter,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CartanArg {
    Minimal,
    Full,
}

impl From<CartanArg> for CartanMode {
    fn from(c: CartanArg) -> Self {
        match c {
            CartanArg::Minimal => CartanMode::Minimal,
            CartanArg::Full => CartanMode::Full,
        }
    }
}

#[derive(Args, Clone)]
pub struct RunArgs {
    /// A dominant weight such as "1,0"; may be repeated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    /// Semicolon-separated weights, e.g. "1,0;0,1".
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_set: Option<String>,
    /// Cartan part recorded for the subalgebra. The oracle checks both.
    #[arg(long, value_enum, default_value = "minimal")]
    pub cartan: CartanArg,
    /// Run the commutant oracle on every case.
    #[arg(long)]
    pub verify: bool,
    /// Use only the adjoint module (required outside type A).
    #[arg(long)]
    pub adjoint_only: bool,
    /// Write report.json, results.jsonl and summary.csv here.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Largest module dimension; REGWIDE_MAX_DIM takes precedence.
    #[arg(long, value_name = "N")]
    pub max_dim: Option<usize>,
    /// Include per-phase timing in the report.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Roots in simple-root coordinates, e.g. "[1,0];[1,1]".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "roots_file")]
    pub roots: Option<String>,
    /// File holding roots, either semicolon-separated or a JSON array.
    #[arg(long, value_name = "PATH")]
    pub roots_file: Option<PathBuf>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[command(flatten)]
    pub run: RunArgs,
    /// Skip cases already recorded in the output directory.
    #[arg(long, requires = "out")]
    pub resume: bool,
    /// Worker threads.
    #[arg(long, value_name = "N")]
    pub jobs: Option<usize>,
}

#[derive(Args)]
pub struct FflvArgs {
    #[arg(long)]
    pub rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Write fflv.jsonl and report.json here.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rootsys(args) => commands::rootsys(&args),
        Command::Classify(args) => commands::classify(&args),
        Command::Census(args) => commands::census(&args),
        Command::Fflv(args) => commands::fflv(&args),
    };
    match result {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let cap = err
        .chain()
        .filter_map(|e| e.downcast_ref::<regwide::Error>())
        .any(regwide::Error::is_cap);
    if cap {
        3
    } else {
        2
    }
}
