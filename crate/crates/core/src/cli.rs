//! The `loopchain` command line.
//!
//! Exit codes are `0` on success, `1` when an oracle or verification check
//! disagrees, and `2` for usage errors. Big integers are printed in base 10
//! and, in JSON output, always as strings.

use std::collections::{BTreeMap, HashMap};
use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bench;
use crate::closedpower::{char_poly_closed, det_closed, entry_closed, matrix_power_closed};
use crate::error::Error;
use crate::exactnum::QuadRat;
use crate::exmatrix::ExactMatrix;
use crate::graphfam::{LoopChainGraph, WalkQuery};
use crate::verify::{self, CHAR_POLY_MAX_K};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `|r|` accepted by `power`.
pub const MAX_EXPONENT: i64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "loopchain",
    version,
    about = "Exact integer powers of loop-chain adjacency matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A(k)^r from the Fibonacci closed form.
    Power(PowerArgs),
    /// Print the characteristic polynomial of A(k).
    Charpoly(CharpolyArgs),
    /// Print det A(k).
    Det(DetArgs),
    /// Count walks between two vertices.
    Walks(WalksArgs),
    /// Cross-check every closed form against its oracle.
    Verify(VerifyArgs),
    /// Time the closed form against dense exponentiation (CSV output).
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Pretty,
    Json,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Recompute with dense binary exponentiation and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct CharpolyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=CHAR_POLY_MAX_K as u64))]
    pub k: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Compare with Faddeev-LeVerrier on the built matrix.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Compare with the elimination determinant.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct WalksArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long)]
    pub length: u64,
    /// Use the closed-form entry instead of enumeration.
    #[arg(long)]
    pub closed: bool,
    /// Run both enumeration and the closed form and compare.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "k-max", value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
    #[arg(long = "r-max")]
    pub r_max: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub reps: u64,
    /// Give up on the dense oracle after this many milliseconds.
    #[arg(long = "time-budget-ms", default_value_t = 10_000)]
    pub time_budget_ms: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// JSON payload emitted by every subcommand with `--format json`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub command: String,
    pub k: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub meta: BTreeMap<String, Value>,
}

impl OutputDocument {
    fn new(command: &str, k: u64) -> Self {
        Self {
            command: command.to_string(),
            k,
            r: None,
            matrix: None,
            meta: BTreeMap::new(),
        }
    }

    fn meta(mut self, key: &str, value: Value) -> Self {
        self.meta.insert(key.to_string(), value);
        self
    }
}

/// Failure modes of a subcommand, each tied to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        EXIT_USAGE
                    } else {
                        EXIT_OK
                    }
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Power(a) => cmd_power(&a, out),
        Command::Charpoly(a) => cmd_charpoly(&a, out),
        Command::Det(a) => cmd_det(&a, out),
        Command::Walks(a) => cmd_walks(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_CHECK_FAILED
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn to_usize(k: u64) -> std::result::Result<usize, Failure> {
    usize::try_from(k).map_err(|_| Failure::Usage(format!("k = {k} is too large")))
}

/// Decimal rendering of an integer matrix. Powers of `A(k)` repeat four
/// values, so each distinct entry is converted once.
fn integer_rows(m: &ExactMatrix) -> std::result::Result<Vec<Vec<String>>, Failure> {
    let mut rendered: HashMap<&QuadRat, String> = HashMap::new();
    let mut rows = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for x in m.row(i) {
            if let Some(s) = rendered.get(x) {
                row.push(s.clone());
            } else {
                let s = x.as_integer()?.to_string();
                rendered.insert(x, s.clone());
                row.push(s);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn write_json(out: &mut dyn Write, doc: &OutputDocument) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::Io(std::io::Error::other(e)))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Right-aligned table; falls back to single spaces when entries get long.
fn write_table(out: &mut dyn Write, rows: &[Vec<String>]) -> std::io::Result<()> {
    const MAX_ALIGNED_WIDTH: usize = 24;
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in rows {
        let line = if width <= MAX_ALIGNED_WIDTH {
            row.iter()
                .map(|c| format!("{c:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        } else {
            row.join(" ")
        };
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn match_word(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "mismatch"
    }
}

fn cmd_power(a: &PowerArgs, out: &mut dyn Write) -> CmdResult {
    if a.r.unsigned_abs() > MAX_EXPONENT as u64 {
        return Err(Failure::Usage(format!(
            "|r| must be at most {MAX_EXPONENT}, got {}",
            a.r
        )));
    }
    let k = to_usize(a.k)?;
    let m = matrix_power_closed(k, a.r)?;
    let rows = integer_rows(&m)?;
    let oracle_ok = if a.oracle {
        let dense = LoopChainGraph::new(k)?.adjacency().pow(a.r)?;
        Some(dense == m)
    } else {
        None
    };

    match a.format {
        Format::Pretty => {
            writeln!(out, "A^{} for k={} (n={}):", a.r, k, 2 * k)?;
            write_table(out, &rows)?;
            if let Some(ok) = oracle_ok {
                writeln!(out, "oracle: {}", match_word(ok))?;
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("power", a.k).meta("n", json!(2 * k));
            doc.r = Some(a.r);
            doc.matrix = Some(rows);
            if let Some(ok) = oracle_ok {
                doc = doc.meta("oracle", json!(match_word(ok)));
            }
            write_json(out, &doc)?;
        }
    }
    match oracle_ok {
        Some(false) => Err(Failure::Check(
            "closed form disagrees with dense exponentiation".into(),
        )),
        _ => Ok(EXIT_OK),
    }
}

fn cmd_charpoly(a: &CharpolyArgs, out: &mut dyn Write) -> CmdResult {
    let k = to_usize(a.k)?;
    let p = char_poly_closed(k)?;
    let coeffs: Vec<String> = p.integer_coeffs()?.iter().map(BigInt::to_string).collect();
    let factored = format!("(x^2-x-1)^{k}");
    let oracle_ok = if a.oracle {
        Some(LoopChainGraph::new(k)?.adjacency().char_poly()? == p)
    } else {
        None
    };

    match a.format {
        Format::Pretty => {
            writeln!(out, "P_{}(x) = {}", 2 * k, p)?;
            writeln!(out, "factored: {factored}")?;
            writeln!(out, "coefficients (constant first): [{}]", coeffs.join(", "))?;
            if let Some(ok) = oracle_ok {
                writeln!(out, "oracle: {}", match_word(ok))?;
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("charpoly", a.k)
                .meta("n", json!(2 * k))
                .meta("coefficients", json!(coeffs))
                .meta("factored", json!(factored));
            if let Some(ok) = oracle_ok {
                doc = doc.meta("oracle", json!(match_word(ok)));
            }
            write_json(out, &doc)?;
        }
    }
    match oracle_ok {
        Some(false) => Err(Failure::Check(
            "closed form disagrees with Faddeev-LeVerrier".into(),
        )),
        _ => Ok(EXIT_OK),
    }
}

fn cmd_det(a: &DetArgs, out: &mut dyn Write) -> CmdResult {
    let k = to_usize(a.k)?;
    let det = det_closed(k)?;
    let oracle_ok = if a.oracle {
        Some(LoopChainGraph::new(k)?.adjacency().det()? == QuadRat::from_integer(det))
    } else {
        None
    };
    match a.format {
        Format::Pretty => {
            writeln!(out, "{det}")?;
            if let Some(ok) = oracle_ok {
                writeln!(out, "oracle: {}", match_word(ok))?;
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("det", a.k)
                .meta("n", json!(2 * k))
                .meta("det", json!(det.to_string()));
            if let Some(ok) = oracle_ok {
                doc = doc.meta("oracle", json!(match_word(ok)));
            }
            write_json(out, &doc)?;
        }
    }
    match oracle_ok {
        Some(false) => Err(Failure::Check("closed form disagrees with elimination".into())),
        _ => Ok(EXIT_OK),
    }
}

fn cmd_walks(a: &WalksArgs, out: &mut dyn Write) -> CmdResult {
    let k = to_usize(a.k)?;
    let g = LoopChainGraph::new(k)?;
    let query = WalkQuery {
        from: a.from,
        to: a.to,
        length: a.length,
    };
    let r = i64::try_from(a.length)
        .map_err(|_| Failure::Usage(format!("length {} is too large", a.length)))?;

    let run_enumeration = !a.closed || a.oracle;
    let run_closed = a.closed || a.oracle;
    let enumerated = if run_enumeration {
        Some(BigInt::from(g.count_walks(query)?))
    } else {
        None
    };
    let closed = if run_closed {
        Some(entry_closed(k, a.from, a.to, r)?)
    } else {
        None
    };
    let agree = match (&enumerated, &closed) {
        (Some(x), Some(y)) => Some(x == y),
        _ => None,
    };
    let count = closed
        .as_ref()
        .or(enumerated.as_ref())
        .expect("at least one path runs")
        .to_string();
    let method = match (run_enumeration, run_closed) {
        (true, true) => "both",
        (true, false) => "enumeration",
        _ => "closed",
    };

    match a.format {
        Format::Pretty => {
            writeln!(out, "{count}")?;
            if let Some(ok) = agree {
                let word = if ok { "agree" } else { "disagree" };
                writeln!(out, "enumeration and closed form {word}")?;
            }
        }
        Format::Json => {
            let mut doc = OutputDocument::new("walks", a.k)
                .meta("n", json!(2 * k))
                .meta("from", json!(a.from))
                .meta("to", json!(a.to))
                .meta("length", json!(a.length))
                .meta("count", json!(count))
                .meta("method", json!(method));
            doc.r = Some(r);
            if let Some(ok) = agree {
                doc = doc.meta("agree", json!(ok));
            }
            write_json(out, &doc)?;
        }
    }
    match agree {
        Some(false) => Err(Failure::Check(format!(
            "enumeration gave {}, closed form gave {}",
            enumerated.unwrap_or_default(),
            closed.unwrap_or_default()
        ))),
        _ => Ok(EXIT_OK),
    }
}

/// Writes a verification report and maps it to an exit code.
pub fn emit_report(report: &verify::Report, format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    match format {
        Format::Pretty => {
            for c in &report.checks {
                writeln!(out, "{c}")?;
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", report.checks.len())?;
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let mut doc = OutputDocument::new("verify", report.k_max as u64)
                .meta("k_max", json!(report.k_max))
                .meta("r_max", json!(report.r_max))
                .meta("checks", Value::Array(checks))
                .meta("passed", json!(report.all_passed()));
            doc.r = Some(report.r_max);
            let text = serde_json::to_string_pretty(&doc).map_err(std::io::Error::other)?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let report = verify::run(to_usize(a.k_max)?, i64::from(a.r_max));
    Ok(emit_report(&report, a.format, out)?)
}

fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let k = to_usize(a.k)?;
    let reps = usize::try_from(a.reps).map_err(|_| Failure::Usage("reps too large".into()))?;
    let rows = bench::run(k, a.r, reps, Duration::from_millis(a.time_budget_ms))?;
    match a.format {
        Format::Pretty => {
            writeln!(out, "{}", bench::CSV_HEADER)?;
            for row in &rows {
                writeln!(out, "{}", row.to_csv())?;
            }
        }
        Format::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| json!({ "method": row.method.name(), "median_ns": row.median_field() }))
                .collect();
            let mut doc = OutputDocument::new("bench", a.k)
                .meta("n", json!(2 * k))
                .meta("reps", json!(a.reps))
                .meta("rows", Value::Array(rows_json));
            doc.r = Some(a.r);
            write_json(out, &doc)?;
        }
    }
    Ok(EXIT_OK)
}
