//! `gvcalc` — exact coherence checks and handlebody block computations
//! for pointed balanced braided Grothendieck-Verdier categories.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use gvcalc::commands::{self, Format, Outcome};

#[derive(Parser)]
#[command(
    name = "gvcalc",
    about = "Exact coherence suites and handlebody-group block operators for pointed categories",
    version
)]
struct Cli {
    /// Output format: json, csv or text (default from $GVCALC_FORMAT,
    /// else json)
    #[arg(long, global = true)]
    format: Option<String>,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every coherence suite of a category file
    Check {
        /// Category description file
        file: PathBuf,
    },
    /// Dimensions of a block space V_{g,n}(labels)
    Blocks {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        /// Comma-separated boundary labels; residues of product factors
        /// joined by dots
        #[arg(long, default_value = "")]
        labels: String,
    },
    /// Eigenvalues of the Dehn twist around a handle
    TwistSpectrum {
        file: PathBuf,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value = "")]
        labels: String,
        #[arg(long, default_value_t = 1)]
        handle: usize,
    },
    /// Excision and sewing dimension identities
    Excise {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, default_value = "")]
        labels: String,
    },
    /// Apply a framed braid word to a genus-zero block space
    Act {
        file: PathBuf,
        #[arg(long)]
        labels: String,
        /// Braid word such as "t1 s1 s2^-1"
        #[arg(long)]
        braid: String,
    },
    /// Framed-braid arithmetic without a category
    Braid {
        #[arg(long)]
        strands: usize,
        /// One of: multiply, equals, equals-check, cable, relations
        #[arg(long)]
        op: String,
        /// Braid words (repeatable)
        #[arg(long)]
        word: Vec<String>,
        /// Cable widths, comma separated
        #[arg(long)]
        widths: Option<String>,
    },
    /// Invariants of a half-edge graph file
    Graph {
        file: PathBuf,
    },
}

fn run(cli: Cli) -> Result<Outcome> {
    let format = Format::from_flag(cli.format.as_deref())?;
    let read = |p: &PathBuf| -> Result<String> {
        std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
    };
    match &cli.command {
        Command::Check { file } => commands::cmd_check(&read(file)?, format),
        Command::Blocks { file, genus, labels } => {
            commands::cmd_blocks(&read(file)?, *genus, labels, format)
        }
        Command::TwistSpectrum { file, genus, labels, handle } => {
            commands::cmd_twist_spectrum(&read(file)?, *genus, labels, *handle, format)
        }
        Command::Excise { file, genus, labels } => {
            commands::cmd_excise(&read(file)?, *genus, labels, format)
        }
        Command::Act { file, labels, braid } => {
            commands::cmd_act(&read(file)?, labels, braid, format)
        }
        Command::Braid { strands, op, word, widths } => {
            commands::cmd_braid(*strands, word, op, widths.as_deref(), format)
        }
        Command::Graph { file } => commands::cmd_graph(&read(file)?, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok(outcome) => {
            let write_result = match &output {
                Some(path) => std::fs::write(path, outcome.body.as_bytes())
                    .with_context(|| format!("cannot write {}", path.display())),
                None => std::io::stdout()
                    .write_all(outcome.body.as_bytes())
                    .context("cannot write to stdout"),
            };
            if let Err(e) = write_result {
                eprintln!("error: {:#}", e);
                return ExitCode::from(2);
            }
            if outcome.failures > 0 {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::FAILURE
        }
    }
}
