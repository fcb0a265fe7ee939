//! `forceproof`: load algebras, arguments, measures, matrices, relations,
//! and mass functions from JSON; validate, classify, transform, compose,
//! and propagate; emit JSON or tabular reports.
//!
//! Exit codes: 0 success, 1 domain violation (failed axioms, refused
//! classification, mismatched algebras, oversized tables), 2 malformed
//! input (unreadable files, bad JSON, values that do not denote a typed
//! object).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

mod commands;
mod files;
mod render;

use forceproof::RelationMode;

#[derive(Parser)]
#[command(name = "forceproof", version, about = "Calculus of uncertain arguments between finite Boolean algebras")]
pub struct Cli {
    /// Tolerance for axiom checks, classification thresholds, and sum laws.
    #[arg(long, global = true, default_value_t = forceproof::DEFAULT_TOLERANCE, value_parser = positive_f64)]
    pub tolerance: f64,

    /// Cross-check fast kernels against brute-force sums (1e-12).
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Validation mode for compatibility relations.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Generated)]
    pub relation_mode: ModeArg,

    /// Largest allowed table, as total index bits (m + n).
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=26))]
    pub max_table_bits: u32,

    #[command(subcommand)]
    pub command: Command,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Generated,
}

impl From<ModeArg> for RelationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => RelationMode::Strict,
            ModeArg::Generated => RelationMode::Generated,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Backward,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check an argument file against the five axioms.
    Validate { argument: PathBuf },

    /// Report classification flags and kernel minima for an argument.
    Classify { argument: PathBuf },

    /// Emit the forward or backward kernel of an argument.
    Transform {
        argument: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },

    /// Build an argument from a measure, matrix, relation, or algebra file.
    #[command(group(ArgGroup::new("source").required(true).args(["prototypical", "product", "relation", "identity"])))]
    Make {
        /// Probability-measure file: {"algebra": {...}, "atom_probs": [...]}.
        #[arg(long)]
        prototypical: Option<PathBuf>,
        /// Row-stochastic matrix file: {"rows": [[...], ...]}.
        #[arg(long)]
        product: Option<PathBuf>,
        /// Relation file: atom pairs or element pairs.
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Algebra file: {"atoms": [...]}.
        #[arg(long)]
        identity: Option<PathBuf>,
    },

    /// Compose two arguments sharing a middle algebra.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },

    /// Carry a mass function through an argument.
    Propagate {
        mass: PathBuf,
        argument: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },

    /// Run the bundled worked example end to end.
    Demo,
}

/// Why a command failed, mapped onto the exit-code contract.
pub enum CliError {
    /// Exit 1: sound input, failed mathematics.
    Domain(String),
    /// Exit 2: the input could not be read or parsed into a typed object.
    Input(String),
}

impl From<forceproof::Error> for CliError {
    fn from(e: forceproof::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type CmdResult = Result<u8, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match commands::run(&cli) {
        Ok(code) => code,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    ExitCode::from(code)
}
