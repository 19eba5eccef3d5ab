//! Command-line front end.
//!
//! Every command renders into a [`Report`]; [`execute`] writes it out and
//! maps the status to the process exit code.

mod commands;
pub mod format;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::model::PotentialParams;
use crate::phaseshift::AngleUnit;
pub use commands::{cmd_bound_states, cmd_compare, cmd_point, cmd_scan, cmd_table};
pub use format::Format;

/// Exit status, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    ToleranceExceeded = 1,
    Usage = 2,
    Numerical = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Rendered output of one command. `text` is the data stream; `notes` holds
/// summaries that would break a CSV stream and go to stderr in that case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub notes: String,
    pub status: Status,
}

impl Report {
    fn usage(message: impl fmt::Display) -> Self {
        Self {
            text: String::new(),
            notes: format!("error: {message}\n"),
            status: Status::Usage,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hyscat", version, about = "Phase shifts and bound states for a Hulthén well with a screened Yukawa tail")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write the data stream here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The 144-cell grid l ∈ {0,1,2}, k ∈ {0.01,…,0.15}, α ∈ {0.050,0.075,0.100}, A ∈ {0,5}.
    Table(TableArgs),
    /// δ_l over a k-range, one column per A.
    Scan(ScanArgs),
    /// Analytic δ_l against direct integration of both radial equations.
    Compare(CompareArgs),
    /// Pole energies against the shooting solver.
    BoundStates(BoundArgs),
    /// Every intermediate quantity behind one δ_l.
    Point(PointArgs),
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    /// Strength of the Hulthén-type term.
    #[arg(long = "V0", default_value_t = 1.0, allow_negative_numbers = true)]
    pub v0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

impl PotentialArgs {
    pub fn params(&self, a: f64, alpha: f64) -> crate::Result<PotentialParams> {
        PotentialParams::with_units(self.v0, a, alpha, self.mu, self.hbar)
    }
}

/// START:STOP:STEP, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl KRange {
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

impl std::str::FromStr for KRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts.as_slice() else {
            return Err(format!("expected START:STOP:STEP, got {s:?}"));
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        let r = KRange {
            start: num(start)?,
            stop: num(stop)?,
            step: num(step)?,
        };
        if ![r.start, r.stop, r.step].iter().all(|v| v.is_finite()) {
            return Err("k-range bounds must be finite".into());
        }
        if !(r.start > 0.0) {
            return Err(format!("k must be > 0, range starts at {}", r.start));
        }
        if !(r.step > 0.0) {
            return Err(format!("k-range step must be > 0, got {}", r.step));
        }
        if r.stop < r.start {
            return Err(format!("empty k-range: stop {} < start {}", r.stop, r.start));
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, Args)]
pub struct KArgs {
    /// Wave number(s), comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "k_range")]
    pub k: Vec<f64>,
    #[arg(long, value_name = "START:STOP:STEP")]
    pub k_range: Option<KRange>,
}

impl KArgs {
    fn values(&self) -> Option<Vec<f64>> {
        match (&self.k_range, self.k.is_empty()) {
            (Some(r), _) => Some(r.values()),
            (None, false) => Some(self.k.clone()),
            (None, true) => None,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, default_value = "rad")]
    pub unit: AngleUnit,
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
    /// Add per-cell differences from the published values.
    #[arg(long = "diff-paper")]
    pub diff_published: bool,
    /// Largest accepted |difference|, in output units.
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Yukawa strengths, one output column each.
    #[arg(long = "A", value_delimiter = ',', default_value = "0,5", allow_negative_numbers = true)]
    pub a: Vec<f64>,
    #[command(flatten)]
    pub k: KArgs,
    #[arg(long, default_value = "rad")]
    pub unit: AngleUnit,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Each axis defaults to the published grid.
#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_delimiter = ',')]
    pub l: Vec<u32>,
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<f64>,
    #[arg(long = "A", value_delimiter = ',', allow_negative_numbers = true)]
    pub a: Vec<f64>,
    #[command(flatten)]
    pub k: KArgs,
    #[arg(long, default_value = "rad")]
    pub unit: AngleUnit,
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
    /// Largest accepted analytic-vs-integrated difference mod π, in output units.
    #[arg(long, default_value_t = 0.02)]
    pub tol: f64,
    /// Initial integration step.
    #[arg(long)]
    pub oracle_step: Option<f64>,
    /// Outer match radius.
    #[arg(long)]
    pub oracle_rmax: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub l: Vec<u32>,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long = "A", default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Highest node count listed.
    #[arg(long, default_value_t = 2)]
    pub n_max: u32,
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub potential: PotentialArgs,
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    #[arg(long)]
    pub k: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long = "A", default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value = "rad")]
    pub unit: AngleUnit,
    #[arg(long, value_enum, default_value = "md")]
    pub format: Format,
}

impl Command {
    fn format(&self) -> Format {
        match self {
            Command::Table(a) => a.format,
            Command::Scan(a) => a.format,
            Command::Compare(a) => a.format,
            Command::BoundStates(a) => a.format,
            Command::Point(a) => a.format,
        }
    }
}

/// Parse and run without touching the process streams.
pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => dispatch(&cfg.command),
        Err(e) => {
            let status = if e.use_stderr() { Status::Usage } else { Status::Success };
            let rendered = e.render().to_string();
            if status == Status::Success {
                Report {
                    text: rendered,
                    notes: String::new(),
                    status,
                }
            } else {
                Report {
                    text: String::new(),
                    notes: rendered,
                    status,
                }
            }
        }
    }
}

pub fn dispatch(command: &Command) -> Report {
    match command {
        Command::Table(a) => cmd_table(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Compare(a) => cmd_compare(a),
        Command::BoundStates(a) => cmd_bound_states(a),
        Command::Point(a) => cmd_point(a),
    }
}

/// Parse, run and write. Returns the process exit code.
pub fn execute<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<T> = args.into_iter().collect();
    let (output, format) = match RunConfig::try_parse_from(args.clone()) {
        Ok(cfg) => (cfg.output.clone(), Some(cfg.command.format())),
        Err(_) => (None, None),
    };
    let report = run(args);
    let mut notes = report.notes.clone();
    let mut text = report.text;
    if format == Some(Format::Markdown) && !notes.is_empty() && report.status != Status::Usage {
        text.push('\n');
        text.push_str(&notes);
        notes.clear();
    }
    let written = match &output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    };
    if !notes.is_empty() {
        let _ = std::io::stderr().write_all(notes.as_bytes());
    }
    match written {
        Ok(()) => report.status.code(),
        Err(e) => {
            eprintln!("error: {e}");
            Status::Usage.code()
        }
    }
}
