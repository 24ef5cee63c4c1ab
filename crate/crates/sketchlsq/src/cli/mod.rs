//! Command-line surface behind the `sketchlsq` binary.
//!
//! Subcommands: `solve` (one solver run, trace artifacts), `bench`
//! (mean-error comparison of all methods), `moments` (closed-form and
//! Monte-Carlo inverse moments), `tune` (cost-optimal sketch sizes),
//! `rootradius` (momentum dynamics minimum), `mp` (Marchenko-Pastur rate
//! checks).
//!
//! Artifacts are CSV, JSON and SVG files under `--out`. With a fixed seed
//! every artifact is byte-identical across reruns; wall-clock measurement is
//! opt-in (`--timings`, `--measure`) because it breaks that property, and
//! phase timings otherwise go to stderr only.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 numerical breakdown.

mod bench;
mod moments_cmd;
mod mp_cmd;
mod rootradius;
mod schema;
mod solve;
mod tune;

pub use schema::{validate_against_schema, SOLVE_SIDECAR_SCHEMA};

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "sketchlsq",
    version,
    about = "Sketch-preconditioned least-squares solvers and their rate/cost calculators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for trial fan-out (default: all cores). Results are
    /// merged in seed order, so the thread count never changes outputs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    Solve(solve::SolveArgs),
    Bench(bench::BenchArgs),
    Moments(moments_cmd::MomentsArgs),
    Tune(tune::TuneArgs),
    Rootradius(rootradius::RootRadiusArgs),
    Mp(mp_cmd::MpArgs),
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool may already exist when the CLI is
        // driven in-process several times.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Solve(args) => solve::cmd_solve(&args),
        Command::Bench(args) => bench::cmd_bench(&args),
        Command::Moments(args) => moments_cmd::cmd_moments(&args),
        Command::Tune(args) => tune::cmd_tune(&args),
        Command::Rootradius(args) => rootradius::cmd_rootradius(&args),
        Command::Mp(args) => mp_cmd::cmd_mp(&args),
    };
    match outcome {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Breakdown { .. } | Error::Numerical(_) | Error::RankDeficient(_) => 2,
        _ => 1,
    }
}

/// A value that may be deferred to theory-driven resolution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AutoOr<T> {
    Auto,
    Value(T),
}

impl<T: FromStr> FromStr for AutoOr<T>
where
    T::Err: fmt::Display,
{
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            Ok(AutoOr::Auto)
        } else {
            s.parse::<T>().map(AutoOr::Value).map_err(|e| e.to_string())
        }
    }
}

impl<T: fmt::Display> fmt::Display for AutoOr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoOr::Auto => write!(f, "auto"),
            AutoOr::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Output directory and format subset shared by all subcommands.
#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Directory for generated artifacts.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Comma-separated subset of csv,json,svg.
    #[arg(long, default_value = "csv,json,svg", value_parser = Formats::from_str)]
    pub formats: Formats,
}

#[derive(Clone, Copy, Debug)]
pub struct Formats {
    pub csv: bool,
    pub json: bool,
    pub svg: bool,
}

impl FromStr for Formats {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut f = Formats {
            csv: false,
            json: false,
            svg: false,
        };
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok.to_ascii_lowercase().as_str() {
                "csv" => f.csv = true,
                "json" => f.json = true,
                "svg" => f.svg = true,
                other => return Err(format!("unknown format '{other}'")),
            }
        }
        if !(f.csv || f.json || f.svg) {
            return Err("at least one of csv,json,svg required".into());
        }
        Ok(f)
    }
}

impl OutputArgs {
    pub fn prepare(&self) -> Result<()> {
        std::fs::create_dir_all(&self.out)?;
        Ok(())
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.out.join(name)
    }
}

pub(crate) fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content)?;
    Ok(())
}

/// Shortest round-trip float formatting; CSV cells stay byte-stable.
pub(crate) fn cell(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v}")
    }
}

pub(crate) fn to_json_pretty<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Usage(format!("serialization failed: {e}")))
}
