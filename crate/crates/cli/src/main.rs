use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod stats;
mod table;
mod verify;

/// Exact q-Stirling numbers, q-Eulerian polynomials and the identities
/// between them.
#[derive(Parser)]
#[command(name = "qstirling", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle of polynomials, one row per (n, k).
    Table(table::TableArgs),
    /// Check registered identities over their parameter grids.
    Verify(verify::VerifyArgs),
    /// Print per-element statistics of a permutation group.
    Stats(stats::StatsArgs),
    /// List the registered identities.
    List,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn list() -> String {
    let mut out = String::new();
    for e in qstirling::identities::entries() {
        let tag = if e.control { " [control]" } else { "" };
        out.push_str(&format!("{:<24} {}{tag}\n", e.id, e.summary));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(args) => table::run(&args).map(|s| (s, true)),
        Command::Verify(args) => verify::run(&args),
        Command::Stats(args) => stats::run(&args).map(|s| (s, true)),
        Command::List => Ok((list(), true)),
    };
    match result {
        Ok((text, ok)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
