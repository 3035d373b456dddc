use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand};
use ortholattice::builders::{generators, GenParams};
use ortholattice::commands::{
    cmd_check, cmd_decompose, cmd_gen, cmd_regular, cmd_subspace, Outcome, EXIT_INPUT, EXIT_OK,
};
use ortholattice::subspace::Suite;

/// Analyse finite orthocomplemented lattices and property-test the
/// subspace lattice of Q^n.
#[derive(Parser)]
#[command(name = "ortholat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a lattice file and classify it.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a generated lattice in the file format.
    Gen {
        #[arg(value_parser = kinds())]
        kind: String,
        /// Number of orthogonal pairs for `lm`.
        #[arg(long)]
        m: Option<usize>,
        /// Number of atoms for `boolean`.
        #[arg(long)]
        atoms: Option<usize>,
    },
    /// Split a modular ortholattice along the atoms of its center.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check perspectivity for regularity; optionally scan every partition.
    Regular {
        file: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the property suite on the subspaces of Q^dim.
    Subspace {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(2..=6))]
        dim: u8,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all", value_parser = PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

fn kinds() -> PossibleValuesParser {
    PossibleValuesParser::new(generators().iter().map(|g| g.kind()))
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let err = |e: ortholattice::Error| e.to_string();
    match cli.command {
        Command::Check { file, json } => cmd_check(&read(&file)?, json).map_err(err),
        Command::Gen { kind, m, atoms } => cmd_gen(&kind, &GenParams { m, atoms })
            .map(|output| Outcome {
                code: EXIT_OK,
                output,
            })
            .map_err(err),
        Command::Decompose { file, json } => cmd_decompose(&read(&file)?, json).map_err(err),
        Command::Regular {
            file,
            enumerate,
            json,
        } => cmd_regular(&read(&file)?, enumerate, json).map_err(err),
        Command::Subspace {
            dim,
            trials,
            seed,
            suite,
            json,
        } => {
            let suite: Suite = suite.parse()?;
            cmd_subspace(dim as usize, trials, seed, suite, json).map_err(err)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.output);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
