//! Command-line front end: argument parsing, command dispatch, and the
//! mapping from library errors to exit codes.
//!
//! Exit codes: 0 success, 1 malformed input, 2 a predicate precondition does
//! not hold (the report names the witness), 64 usage error, 70 internal
//! invariant failure (the report carries the offending data).

pub mod commands;
pub mod document;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hollowlat::constructions::ConstructionKind;
use serde_json::Value;

pub use commands::{run, Failure, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "hollowlat",
    version,
    about = "Exact tools for hollow and empty lattice polytopes"
)]
pub struct Cli {
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Point-set JSON document; `-` reads stdin.
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emptiness, hollowness, simpliciality and general position.
    Classify(InputArg),
    /// Certified lattice width, plus a flatness audit when hollow.
    Width(InputArg),
    /// Reduce a hollow simplicial polytope to an empty one.
    Reduce(InputArg),
    /// Longest lattice segment; with `--k`, the mod-k witness and a
    /// translation avoiding (2k)Z^d.
    Segments {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Emit a named construction as a point-set document.
    Construct {
        #[arg(value_parser = parse_kind)]
        kind: ConstructionKind,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Extremal hollow-simplicial search or the ball scaling experiment.
    Search(SearchArgs),
    /// Constructions tabulated against the bound expressions.
    Audit {
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        k: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    Extremal,
    BallScaling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Stochastic,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value = "extremal")]
    pub experiment: Experiment,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: Mode,
    /// Side of the coordinate box `[0, box]^d`.
    #[arg(long = "box", default_value_t = 3)]
    pub box_size: u64,
    /// Search nodes (exhaustive) or proposals (stochastic).
    #[arg(long, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Required for stochastic search.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest k of the ball scaling ladder.
    #[arg(long, default_value_t = 257)]
    pub k: u64,
    /// Smallest k of the ball scaling ladder.
    #[arg(long, default_value_t = 17)]
    pub k_min: u64,
}

fn parse_kind(s: &str) -> Result<ConstructionKind, String> {
    s.parse().map_err(|e: hollowlat::Error| e.to_string())
}

/// Parses arguments without exiting; `Err` carries clap's rendered message
/// and whether it is help/version output rather than a usage error.
pub fn parse_args<I, T>(args: I) -> Result<Cli, (String, bool)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
        (e.render().to_string(), informational)
    })
}

/// Runs a full invocation: returns the exit code, the report text (if any)
/// and diagnostics for stderr. Nothing is printed here.
pub fn invoke<I, T>(args: I) -> (i32, Option<String>, Option<String>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(cli) => cli,
        Err((msg, true)) => return (0, Some(msg), None),
        Err((msg, false)) => return (64, None, Some(msg)),
    };
    let outcome = run(&cli);
    let code = outcome.exit_code();
    let (report, diag) = match outcome {
        Outcome::Report(v) => (Some(v), None),
        Outcome::Failed(Failure::Usage(m)) | Outcome::Failed(Failure::Malformed(m)) => (None, Some(m)),
        Outcome::Failed(Failure::Precondition { report, message })
        | Outcome::Failed(Failure::Internal { report, message }) => (Some(report), Some(message)),
    };
    let text = report.as_ref().map(report::render);
    match (&cli.out, text) {
        (Some(path), Some(text)) => match report::write_atomic(path, &text) {
            Ok(()) => (code, None, diag),
            Err(e) => (1, None, Some(format!("cannot write {}: {e}", path.display()))),
        },
        (_, text) => (code, text, diag),
    }
}

pub(crate) fn report_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}
