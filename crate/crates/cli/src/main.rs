use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use z2z4::Limits;
use z2z4_cli::commands::{self, render, CliError, Report};

/// Exact analysis of small Z2Z4-additive codes.
#[derive(Debug, Parser)]
#[command(name = "z2z4", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on every exhaustive computation (codewords, ambient scan, permutation pairs).
    #[arg(long, global = true, env = "Z2Z4_LIMIT", value_name = "N")]
    limit: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weight profile, one-weight, two-distance and relative two-weight structure.
    Classify { file: PathBuf },
    /// Generators of the dual code.
    Dual { file: PathBuf },
    /// Every codeword, in canonical order.
    Enumerate { file: PathBuf },
    /// Binary Gray image.
    Gray { file: PathBuf },
    /// t-fold replication.
    Replicate {
        file: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Permutation automorphism group.
    Paut {
        file: PathBuf,
        /// Also evaluate the closed-form order for single-generator codes.
        #[arg(long)]
        formula: bool,
    },
    /// Search for a coordinate permutation carrying FILE1 onto FILE2.
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Re-check the registered structural claims on one code.
    CheckTheorems {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
}

fn emit<R: Report>(report: Result<R, CliError>, json: bool) -> Result<i32, CliError> {
    let report = report?;
    let text = render(&report, json)?;
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(text.as_bytes());
    Ok(report.exit_code())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let limits = cli.limit.map(Limits::uniform).unwrap_or_default();
    let json = cli.json;
    match cli.command {
        Command::Classify { file } => emit(commands::cmd_classify(&file, &limits), json),
        Command::Dual { file } => emit(commands::cmd_dual(&file, &limits), json),
        Command::Enumerate { file } => emit(commands::cmd_enumerate(&file, &limits), json),
        Command::Gray { file } => emit(commands::cmd_gray(&file, &limits), json),
        Command::Replicate { file, t } => emit(commands::cmd_replicate(&file, t, &limits), json),
        Command::Paut { file, formula } => emit(commands::cmd_paut(&file, formula, &limits), json),
        Command::Equiv { file1, file2 } => emit(commands::cmd_equiv(&file1, &file2, &limits), json),
        Command::CheckTheorems { file, t } => {
            emit(commands::cmd_check_theorems(&file, t, &limits), json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("z2z4: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
