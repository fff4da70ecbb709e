//! The `compdet` command line.
//!
//! Exit codes: 0 when everything verified, 1 on a mathematical mismatch,
//! 2 on usage or input errors.

mod report;
pub mod selfcheck;
mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::detmat::MatrixError;
use crate::series::{parse_series, ParsedSeries, SeriesError};

pub use report::{Case, VerifyReport};
pub use verify::{cmd_det, cmd_verify, DetOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Theorem {
    /// Powers `f^i` of `f = 1 + a1 x + ...`
    #[value(name = "1")]
    #[serde(rename = "1")]
    Powers,
    /// Compositional iterates of `f = x + b1 x^2 + ...`
    #[value(name = "2")]
    #[serde(rename = "2")]
    Iterates,
    /// Iterates of a bivariate `f(t) = sum b[m,n] t^m x^n`
    #[value(name = "3")]
    #[serde(rename = "3")]
    Bivariate,
    /// Derivatives of powers, over the ring of truncated series
    #[value(name = "mina")]
    #[serde(rename = "mina")]
    Derivatives,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Powers => "1",
            Theorem::Iterates => "2",
            Theorem::Bivariate => "3",
            Theorem::Derivatives => "mina",
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "compdet", version, about = "Exact verification of determinant identities for power series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare determinants with their closed forms for n = 0..=n-max
    Verify(VerifyArgs),
    /// Print the determinant of one theorem matrix
    Det(DetArgs),
    /// Run the built-in invariant suites
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    /// Series file; random series are generated when omitted
    #[arg(long, conflicts_with_all = ["seed", "trials"])]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pub n_max: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Override the truncation order
    #[arg(long)]
    pub order: Option<usize>,
    /// Emit the report as JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DetArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dump_matrix: bool,
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SelfcheckArgs {
    #[arg(long, hide = true, value_enum)]
    pub inject_fault: Option<selfcheck::Fault>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: SeriesError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub fn read_series(path: &Path) -> Result<ParsedSeries, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_series(&text).map_err(|source| CliError::Input { path: path.to_owned(), source })
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args).map(|report| {
            let text = if args.json { report.to_json() } else { report.render_table() };
            let _ = out.write_all(text.as_bytes());
            if report.success() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }),
        Command::Det(args) => cmd_det(&args).map(|output| {
            if let Some(dump) = &output.dump {
                let _ = out.write_all(dump.as_bytes());
            }
            let _ = writeln!(out, "{}", output.determinant);
            EXIT_OK
        }),
        Command::Selfcheck(args) => {
            let summary = selfcheck::run_all(args.inject_fault);
            let _ = out.write_all(summary.render().as_bytes());
            Ok(if summary.passed() { EXIT_OK } else { EXIT_MISMATCH })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
