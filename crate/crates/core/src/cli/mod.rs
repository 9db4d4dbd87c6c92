//! The `sigma-lab` command line: argument parsing, table sourcing, a sized
//! worker pool, and CSV / JSON emission for each experiment.
//!
//! Exit codes:
//!
//! | code | meaning                                          |
//! |------|--------------------------------------------------|
//! | 0    | success                                          |
//! | 2    | usage (unknown flag, missing argument)           |
//! | 3    | io (unreadable input, unwritable output)         |
//! | 4    | domain, range, pole, overflow or resource limits |
//! | 5    | malformed or mismatched cache                    |
//! | 6    | accuracy or verification failure                 |
//!
//! Failures print one JSON object on a single line to stderr.

mod output;

pub use output::{csv_bytes, fmt_f64, json_bytes, write_atomic, Sink};

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::arith::{build_sigma_table, value_checksum, Alpha, SigmaTable};
use crate::error::{LabError, Result};
use crate::errorterm::{corollary_exponent, half_integer_grid, scan_error, ErrorSample};
use crate::extremes::{
    series_instance, record_scan, resonance_verify, BoundParts, RecordList, ResonanceInstance,
    Verification, DEFAULT_BUDGET, ASYMPTOTIC_BIG_L,
};
use crate::voronoi::{
    kernel_compare, residual_scan, KernelComparison, KernelQuadrature, ResidualSample,
};

pub const CACHE_DIR_ENV: &str = "SIGMA_LAB_CACHE_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_CACHE: i32 = 5;
pub const EXIT_ACCURACY: i32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "sigma-lab",
    version,
    about = "Fractional divisor sums and their error term"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sieve σ_α(1..=n_max) and store it as an SGAT cache.
    Sieve(SieveArgs),
    /// E_α(x) on a geometric half-integer grid.
    Scan(ScanArgs),
    /// E_α(x) against the truncated oscillating series.
    Series(SeriesArgs),
    /// W_α(y) by Bessel closed form and by contour quadrature.
    Kernel(KernelArgs),
    /// Successive maxima of the normalized error term.
    Records(RecordsArgs),
    /// Brute-force check of the resonance lemma on one instance.
    VerifySound(VerifyArgs),
    /// Print the exponent (2α²+3α+1)/(2α+3).
    Exponent(ExponentArgs),
}

#[derive(Debug, Args)]
pub struct SieveArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub n_max: u64,
    /// Output cache (default: $SIGMA_LAB_CACHE_DIR/sigma-alpha-<α>.sgat).
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub alpha: f64,
    /// Sieve length when no cache is used (default: what the command needs).
    #[arg(long)]
    pub n_max: Option<u64>,
    /// Read σ_α from this SGAT file instead of sieving.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long, default_value_t = 10.0)]
    pub x_min: f64,
    #[arg(long)]
    pub x_max: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long, default_value_t = 1000.0)]
    pub x_min: f64,
    #[arg(long)]
    pub x_max: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    /// Truncation length (default: ⌈x⌉ at each point).
    #[arg(long)]
    pub n_terms: Option<u64>,
    /// Require N inside the admissible window for this ε.
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KernelArgs {
    /// Exponents to tabulate.
    #[arg(long, value_delimiter = ',', default_values_t = vec![0.1, 0.25, 0.4])]
    pub alpha: Vec<f64>,
    /// Kernel arguments.
    #[arg(long, value_delimiter = ',', default_values_t = vec![1.0, 10.0, 100.0])]
    pub y: Vec<f64>,
    /// Relative tolerance of the contour height-doubling check.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecordsArgs {
    #[command(flatten)]
    pub table: TableArgs,
    #[arg(long)]
    pub x_max: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON instance file; without it the series instance is built from the flags below.
    #[arg(long)]
    pub instance: Option<PathBuf>,
    #[arg(long, default_value_t = 0.25)]
    pub alpha: f64,
    #[arg(long, default_value_t = 50)]
    pub n_terms: u64,
    /// Resonance length T; the resonant set is [T/4, 3T/4].
    #[arg(long, default_value_t = 4.0)]
    pub t: f64,
    #[arg(long, default_value_t = ASYMPTOTIC_BIG_L)]
    pub big_l: u64,
    #[arg(long, default_value_t = 100.0)]
    pub big_x: f64,
    /// Index Y (default: smallest one whose window holds the resonant set).
    #[arg(long)]
    pub y_index: Option<usize>,
    /// Grid points per period of the highest frequency.
    #[arg(long, default_value_t = 20)]
    pub grid_density: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExponentArgs {
    #[arg(long)]
    pub alpha: f64,
}

/// Serialized form of a [`ResonanceInstance`]; indices are 1-based.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InstanceSpec {
    pub coeffs: Vec<f64>,
    pub freqs: Vec<f64>,
    pub phase: f64,
    pub resonant_set: Vec<usize>,
    pub big_l: u64,
    pub y_index: usize,
    pub big_x: f64,
}

impl InstanceSpec {
    pub fn build(&self) -> Result<ResonanceInstance> {
        ResonanceInstance::new(
            self.coeffs.clone(),
            self.freqs.clone(),
            self.phase,
            self.resonant_set.iter().copied().collect::<BTreeSet<_>>(),
            self.big_l,
            self.y_index,
            self.big_x,
        )
    }
}

#[derive(Debug, Serialize)]
struct InstanceSummary {
    terms: usize,
    phase: f64,
    resonant_set: Vec<usize>,
    big_l: u64,
    y_index: usize,
    lambda_y: f64,
    big_x: f64,
    interval: (f64, f64),
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    instance: InstanceSummary,
    bound: f64,
    bound_parts: BoundParts,
    x_found: f64,
    s_at_x: f64,
    grid_density: u64,
    grid_index: u64,
    searched_hi: f64,
}

fn summarize(inst: &ResonanceInstance) -> InstanceSummary {
    InstanceSummary {
        terms: inst.coeffs().len(),
        phase: inst.phase(),
        resonant_set: inst.resonant_set().iter().copied().collect(),
        big_l: inst.big_l(),
        y_index: inst.y_index(),
        lambda_y: inst.freqs()[inst.y_index() - 1],
        big_x: inst.big_x(),
        interval: inst.interval(),
    }
}

/// Verification report as pretty JSON.
pub fn verification_json(inst: &ResonanceInstance, v: &Verification) -> Result<Vec<u8>> {
    json_bytes(&VerifyReport {
        instance: summarize(inst),
        bound: v.bound,
        bound_parts: inst.bound_parts()?,
        x_found: v.x_found,
        s_at_x: v.s_at_x,
        grid_density: v.grid_density,
        grid_index: v.grid_index,
        searched_hi: v.searched_hi,
    })
}

pub fn scan_csv(samples: &[ErrorSample]) -> Result<Vec<u8>> {
    csv_bytes(
        &["x", "s_value", "main", "e_value", "normalized"],
        samples.iter().map(|s| {
            vec![
                fmt_f64(s.x),
                fmt_f64(s.s_value),
                fmt_f64(s.main),
                fmt_f64(s.e_value),
                fmt_f64(s.normalized),
            ]
        }),
    )
}

pub fn series_csv(rows: &[ResidualSample]) -> Result<Vec<u8>> {
    csv_bytes(
        &[
            "x",
            "N",
            "e_value",
            "approx",
            "residual",
            "residual_normalized",
        ],
        rows.iter().map(|r| {
            vec![
                fmt_f64(r.x),
                r.n_terms.to_string(),
                fmt_f64(r.e_value),
                fmt_f64(r.approx),
                fmt_f64(r.residual),
                fmt_f64(r.residual_normalized),
            ]
        }),
    )
}

pub fn kernel_csv(rows: &[KernelComparison]) -> Result<Vec<u8>> {
    csv_bytes(
        &["y", "alpha", "bessel_value", "contour_value", "rel_diff"],
        rows.iter().map(|r| {
            vec![
                fmt_f64(r.y),
                fmt_f64(r.alpha),
                fmt_f64(r.bessel_value),
                fmt_f64(r.contour_value),
                fmt_f64(r.rel_diff),
            ]
        }),
    )
}

pub fn records_csv(records: &RecordList) -> Result<Vec<u8>> {
    csv_bytes(
        &["x", "e_value", "normalized"],
        records
            .entries()
            .iter()
            .map(|r| vec![fmt_f64(r.x), fmt_f64(r.e_value), fmt_f64(r.normalized)]),
    )
}

/// Exit code for a library error.
pub fn exit_code(err: &LabError) -> i32 {
    match err {
        LabError::Io(_) => EXIT_IO,
        LabError::Cache(_) => EXIT_CACHE,
        LabError::Accuracy { .. } | LabError::VerificationFailed { .. } => EXIT_ACCURACY,
        LabError::Domain(_)
        | LabError::Range { .. }
        | LabError::Pole(_)
        | LabError::EmptyWindow { .. }
        | LabError::Resource(_)
        | LabError::Overflow(_) => EXIT_DOMAIN,
    }
}

fn error_line(kind: &str, message: &str, code: i32) -> String {
    serde_json::json!({ "error": kind, "message": message, "exit_code": code }).to_string()
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help, --version
            print!("{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("usage error").trim();
            eprintln!("{}", error_line("usage", first, EXIT_USAGE));
            return EXIT_USAGE;
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            let code = exit_code(&err);
            eprintln!("{}", error_line(err.kind(), &err.to_string(), code));
            code
        }
    }
}

/// Run a parsed command inside a worker pool of the requested size.
pub fn execute(cli: Cli) -> Result<()> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(LabError::domain("--threads must be positive"));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| LabError::Resource(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cli.command))
}

fn alpha(value: f64) -> Result<Alpha> {
    Alpha::new(value)
}

fn default_cache_path(alpha: Alpha) -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_ENV)
        .map(|dir| Path::new(&dir).join(format!("sigma-alpha-{alpha}.sgat")))
}

/// Resolve the σ table for a command needing entries up to `need`: an explicit
/// cache must exist; the default cache is used when present and long enough;
/// otherwise the table is sieved in memory.
fn load_table(args: &TableArgs, need: u64) -> Result<SigmaTable> {
    let a = alpha(args.alpha)?;
    if let Some(path) = &args.cache {
        return SigmaTable::read_from_path(path, Some(a));
    }
    if let Some(path) = default_cache_path(a).filter(|p| p.is_file()) {
        let table = SigmaTable::read_from_path(&path, Some(a))?;
        if table.n_max() >= need.max(args.n_max.unwrap_or(0)) {
            return Ok(table);
        }
    }
    build_sigma_table(args.n_max.unwrap_or(need).max(1), a)
}

fn ceil_u64(x: f64) -> Result<u64> {
    if !(x >= 0.0) || x >= u64::MAX as f64 {
        return Err(LabError::domain(format!("bound {x} out of range")));
    }
    Ok(x.ceil() as u64)
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Sieve(a) => sieve(a),
        Command::Scan(a) => {
            let sink = Sink::from_option(a.out);
            sink.check_writable()?;
            let table = load_table(&a.table, ceil_u64(a.x_max)?)?;
            let samples = scan_error(a.x_min, a.x_max, a.points, table.alpha(), &table)?;
            sink.write_bytes(&scan_csv(&samples)?)
        }
        Command::Series(a) => {
            let sink = Sink::from_option(a.out);
            sink.check_writable()?;
            // the top grid point can be ⌊x_max⌋ + 1/2, whose default N is ⌊x_max⌋ + 1
            let need = a
                .n_terms
                .unwrap_or(ceil_u64(a.x_max.floor())? + 1)
                .max(ceil_u64(a.x_max)?);
            let table = load_table(&a.table, need)?;
            let grid = half_integer_grid(a.x_min, a.x_max, a.points)?;
            let rows = residual_scan(&grid, a.n_terms, a.eps, &table)?;
            sink.write_bytes(&series_csv(&rows)?)
        }
        Command::Kernel(a) => {
            let sink = Sink::from_option(a.out);
            sink.check_writable()?;
            let mut rows = Vec::with_capacity(a.alpha.len() * a.y.len());
            for &al in &a.alpha {
                let al = alpha(al)?;
                for &y in &a.y {
                    let mut quad = KernelQuadrature::for_point(y);
                    if let Some(tol) = a.tol {
                        quad = quad.with_tolerance(tol);
                    }
                    rows.push(kernel_compare(y, al, &quad)?);
                }
            }
            sink.write_bytes(&kernel_csv(&rows)?)
        }
        Command::Records(a) => {
            let sink = Sink::from_option(a.out);
            sink.check_writable()?;
            let table = load_table(&a.table, ceil_u64(a.x_max)?)?;
            let records = record_scan(table.alpha(), a.x_max, &table)?;
            sink.write_bytes(&records_csv(&records)?)
        }
        Command::VerifySound(a) => verify(a),
        Command::Exponent(a) => {
            println!("{}", corollary_exponent(alpha(a.alpha)?));
            Ok(())
        }
    }
}

fn sieve(a: SieveArgs) -> Result<()> {
    let al = alpha(a.alpha)?;
    let path = match a.cache {
        Some(p) => p,
        None => {
            let p = default_cache_path(al).ok_or_else(|| {
                LabError::domain(format!("sieve needs --cache or {CACHE_DIR_ENV}"))
            })?;
            if let Some(dir) = p.parent() {
                output::ensure_dir(dir)?;
            }
            p
        }
    };
    Sink::File(path.clone()).check_writable()?;
    let table = build_sigma_table(a.n_max, al)?;
    table.write_to_path(&path)?;
    println!(
        "{}",
        serde_json::json!({
            "path": path.display().to_string(),
            "alpha": al.value(),
            "n_max": table.n_max(),
            "checksum": format!("{:016x}", value_checksum(&table)),
        })
    );
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<()> {
    let sink = Sink::from_option(a.out.clone());
    sink.check_writable()?;
    let inst = match &a.instance {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let spec: InstanceSpec = serde_json::from_str(&text)
                .map_err(|e| LabError::domain(format!("instance file: {e}")))?;
            spec.build()?
        }
        None => {
            let table = build_sigma_table(a.n_terms, alpha(a.alpha)?)?;
            series_instance(&table, a.n_terms, a.t, a.big_l, a.big_x, a.y_index)?
        }
    };
    let v = resonance_verify(&inst, a.grid_density, a.budget)?;
    sink.write_bytes(&verification_json(&inst, &v)?)
}
