//! The `foulkes` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input, 3 compute budget
//! exceeded, 4 interrupted.

use std::io::Write;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::cache::RowCache;
use crate::characters::dimension;
use crate::control::Control;
use crate::error::Error;
use crate::foulkes::{
    decompose_with, multiplicity_from_row, multiplicity_with, omega_size, orbit_size, DecomposeOptions, Engine,
    FoulkesShape, MultiplicityOptions,
};
use crate::partitions::{enum_p, enum_partitions, parse_partition, to_hook_coords, HookCoordinates, Partition};
use crate::theorems::{census_with, predictions, verify_all_with};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERRUPTED: i32 = 4;

/// Largest `ab` the census accepts with `--allow-large`.
pub const LARGE_CENSUS_AB: usize = 30;

#[derive(Parser, Debug)]
#[command(name = "foulkes", version, about = "Decompose Foulkes characters and check their vanishing rules")]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Refuse shapes with ab above this.
    #[arg(long, global = true, default_value_t = 20)]
    pub max_ab: usize,
    /// Give up after this many seconds.
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Bulk,
    PerPartition,
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    /// Block size.
    pub a: usize,
    /// Number of blocks.
    pub b: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ⟨φ^(a^b), χ^λ⟩ and the rules that predict it.
    Multiplicity {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        no_fastpath: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Decomposition of φ^(a^b) into irreducible characters.
    Decompose {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Only constituents (the default).
        #[arg(long, conflicts_with = "all")]
        nonzero_only: bool,
        /// Every λ with at most b parts, zeros included.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        no_fastpath: bool,
        #[arg(long, value_enum, default_value_t = EngineArg::Bulk)]
        engine: EngineArg,
    },
    /// Count the zero multiplicities and those the main criterion explains.
    Census {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Permit ab up to 30.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check every rule against computed multiplicities.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Orbits of S_r × S_{ab−r} on set partitions, by linked partition.
    Restrict {
        #[command(flatten)]
        shape: ShapeArgs,
        r: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Convert between a partition and its [k:α] coordinates.
    HookCoords {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition, conflicts_with_all = ["k", "alpha"])]
        lambda: Option<Partition>,
        #[arg(long, required_unless_present = "lambda")]
        k: Option<usize>,
        #[arg(long, value_parser = parse_partition)]
        alpha: Option<Partition>,
    },
}

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Interrupted => EXIT_INTERRUPTED,
            Error::Budget(_) | Error::CapExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first), runs the command and returns the exit
/// code. `interrupt` is polled during long computations.
pub fn run<I, T>(args: I, interrupt: Option<Arc<AtomicBool>>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // Fails only if the pool was already built, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut control = Control::none();
    if let Some(flag) = interrupt {
        control = control.with_interrupt(flag);
    }
    if let Some(secs) = cli.time_limit {
        match Duration::try_from_secs_f64(secs) {
            Ok(d) => control = control.with_deadline(Instant::now() + d),
            Err(_) => {
                let _ = writeln!(err, "error: --time-limit must be a non-negative number of seconds");
                return EXIT_INPUT;
            }
        }
    }
    match execute(&cli, &control, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn shape(args: &ShapeArgs, max_ab: Option<usize>) -> std::result::Result<FoulkesShape, Failure> {
    let s = FoulkesShape::new(args.a, args.b)?;
    if let Some(max) = max_ab {
        if s.degree() > max {
            return Err(fail(
                EXIT_BUDGET,
                format!("ab = {} exceeds the budget of {max} (see --max-ab)", s.degree()),
            ));
        }
    }
    Ok(s)
}

fn execute(cli: &Cli, control: &Control, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Multiplicity {
            shape: sa,
            lambda,
            no_fastpath,
            format,
        } => cmd_multiplicity(shape(sa, Some(cli.max_ab))?, lambda, !no_fastpath, *format, out, err),
        Command::Decompose {
            shape: sa,
            format,
            nonzero_only: _,
            all,
            no_fastpath,
            engine,
        } => {
            let engine = match engine {
                EngineArg::Bulk => Engine::Bulk,
                EngineArg::PerPartition => Engine::PerPartition,
            };
            let opts = DecomposeOptions {
                fast_paths: !no_fastpath,
                engine,
            };
            cmd_decompose(shape(sa, Some(cli.max_ab))?, opts, *all, *format, control, out, err)
        }
        Command::Census {
            shape: sa,
            allow_large,
            format,
        } => {
            let limit = if *allow_large {
                cli.max_ab.max(LARGE_CENSUS_AB)
            } else {
                cli.max_ab
            };
            let s = shape(sa, None)?;
            if s.degree() > limit {
                let hint = if *allow_large || s.degree() > LARGE_CENSUS_AB { "" } else { " (pass --allow-large)" };
                return Err(fail(
                    EXIT_BUDGET,
                    format!("ab = {} exceeds the census budget of {limit}{hint}", s.degree()),
                ));
            }
            cmd_census(s, *format, control, out)
        }
        Command::Verify { shape: sa } => cmd_verify(shape(sa, Some(cli.max_ab))?, control, out),
        Command::Restrict { shape: sa, r, format } => cmd_restrict(shape(sa, None)?, *r, *format, out),
        Command::HookCoords { n, lambda, k, alpha } => cmd_hook_coords(*n, lambda.as_ref(), *k, alpha.as_ref(), out),
    }
}

fn big_json(v: &BigUint) -> serde_json::Value {
    match u64::try_from(v) {
        Ok(small) => small.into(),
        Err(_) => v.to_string().into(),
    }
}

pub fn cmd_multiplicity(
    s: FoulkesShape,
    lambda: &Partition,
    fast_paths: bool,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if lambda.weight() != s.degree() {
        return Err(Error::WeightMismatch {
            expected: s.degree(),
            found: lambda.weight(),
        }
        .into());
    }
    let opts = MultiplicityOptions { fast_paths };
    let m = match RowCache::from_env() {
        Some(cache) if !(fast_paths && crate::foulkes::fast_path_zero(s, lambda).is_some()) => {
            let (row, _) = cache.row(lambda);
            multiplicity_from_row(s, &row)?
        }
        _ => multiplicity_with(s, lambda, opts)?,
    };
    let claims = predictions(s, lambda);
    let coords = to_hook_coords(lambda)?;
    let rules: Vec<&str> = claims.iter().map(|p| p.rule.id()).collect();
    match format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "a": s.a(),
                "b": s.b(),
                "lambda": lambda.to_string(),
                "coords": coords.to_string(),
                "multiplicity": big_json(&m),
                "predicted_by": rules,
            });
            writeln!(out, "{doc}")?;
        }
        OutputFormat::Table | OutputFormat::Csv => {
            writeln!(out, "<φ^{s}, χ^({lambda})> = {m}")?;
            writeln!(out, "coords: {coords}")?;
            if rules.is_empty() {
                writeln!(out, "predicted-by: none")?;
            } else {
                writeln!(out, "predicted-by: {}", rules.join(", "))?;
            }
        }
    }
    let mut code = EXIT_OK;
    for p in &claims {
        if p.verdict.claimed().as_ref() != Some(&m) {
            writeln!(err, "discrepancy: {} claims {} but the multiplicity is {m}", p.rule, p.verdict)?;
            code = EXIT_CHECK_FAILED;
        }
    }
    Ok(code)
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn cmd_decompose(
    s: FoulkesShape,
    opts: DecomposeOptions,
    all: bool,
    format: OutputFormat,
    control: &Control,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let table = decompose_with(s, None, opts, control)?;
    let every = all.then(|| enum_partitions(s.degree(), Some(s.b()), None));
    let rows = every.as_deref();
    let sum = table.dimension_sum();
    let omega = omega_size(s);
    match format {
        OutputFormat::Json => writeln!(out, "{}", table.to_json(rows))?,
        OutputFormat::Csv => write!(out, "{}", table.to_csv(rows))?,
        OutputFormat::Table => {
            let listed: Vec<(&Partition, BigUint)> = match rows {
                Some(rows) => rows.iter().map(|l| (l, table.multiplicity(l))).collect(),
                None => table.entries().map(|(l, m)| (l, m.clone())).collect(),
            };
            let cells: Vec<Vec<String>> = listed
                .iter()
                .map(|(l, m)| vec![l.to_string(), m.to_string(), dimension(l).to_string()])
                .collect();
            write_table(out, &["lambda", "mult", "dimension"], &cells)?;
            let verdict = if sum == omega { "=" } else { "!=" };
            writeln!(out, "dimension sum {sum} {verdict} |Ω^{s}| {omega}")?;
        }
    }
    if sum != omega {
        writeln!(err, "dimension sum {sum} does not match |Ω^{s}| = {omega}")?;
        return Ok(EXIT_CHECK_FAILED);
    }
    Ok(EXIT_OK)
}

pub fn cmd_census(s: FoulkesShape, format: OutputFormat, control: &Control, out: &mut dyn Write) -> Outcome {
    let r = census_with(s.a(), s.b(), control)?;
    match format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a", "b", "total", "zero", "predicted", "elapsed_ms"])
                .and_then(|_| {
                    w.write_record([
                        r.a.to_string(),
                        r.b.to_string(),
                        r.total_considered.to_string(),
                        r.zero_count.to_string(),
                        r.predicted_count.to_string(),
                        r.elapsed.as_millis().to_string(),
                    ])
                })
                .map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            let bytes = w.into_inner().map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            out.write_all(&bytes)?;
        }
        OutputFormat::Table => writeln!(
            out,
            "census {s}: total={} zero={} predicted={} elapsed_ms={}",
            r.total_considered,
            r.zero_count,
            r.predicted_count,
            r.elapsed.as_millis()
        )?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(s: FoulkesShape, control: &Control, out: &mut dyn Write) -> Outcome {
    let found = verify_all_with(s.a(), s.b(), control)?;
    if found.is_empty() {
        writeln!(out, "verify {s}: every claim holds")?;
        return Ok(EXIT_OK);
    }
    for d in &found {
        writeln!(out, "{d}")?;
    }
    writeln!(out, "verify {s}: {} discrepancies", found.len())?;
    Ok(EXIT_CHECK_FAILED)
}

pub fn cmd_restrict(s: FoulkesShape, r: usize, format: OutputFormat, out: &mut dyn Write) -> Outcome {
    if r >= s.degree() {
        return Err(fail(EXIT_INPUT, format!("r = {r} must be less than ab = {}", s.degree())));
    }
    let rows: Vec<(Partition, BigUint)> = enum_p(r, s.a(), s.b())
        .into_iter()
        .map(|l| {
            let size = orbit_size(s, r, &l)?;
            Ok((l, size))
        })
        .collect::<crate::Result<_>>()?;
    let total: BigUint = rows.iter().map(|(_, n)| n).sum();
    let omega = omega_size(s);
    match format {
        OutputFormat::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|(l, n)| serde_json::json!({"lambda": l.to_string(), "orbit_size": big_json(n)}))
                .collect();
            let doc = serde_json::json!({"a": s.a(), "b": s.b(), "r": r, "entries": entries});
            writeln!(out, "{doc}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut write = || -> csv::Result<()> {
                w.write_record(["lambda", "orbit_size"])?;
                for (l, n) in &rows {
                    w.write_record([l.to_string(), n.to_string()])?;
                }
                Ok(())
            };
            write().map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            let bytes = w.into_inner().map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            out.write_all(&bytes)?;
        }
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows.iter().map(|(l, n)| vec![l.to_string(), n.to_string()]).collect();
            write_table(out, &["lambda", "orbit_size"], &cells)?;
            let verdict = if total == omega { "=" } else { "!=" };
            writeln!(out, "orbit sizes sum {total} {verdict} |Ω^{s}| {omega}")?;
        }
    }
    Ok(if total == omega { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_hook_coords(
    n: usize,
    lambda: Option<&Partition>,
    k: Option<usize>,
    alpha: Option<&Partition>,
    out: &mut dyn Write,
) -> Outcome {
    let (lambda, h) = match (lambda, k) {
        (Some(lambda), _) => {
            if lambda.weight() != n {
                return Err(Error::WeightMismatch {
                    expected: n,
                    found: lambda.weight(),
                }
                .into());
            }
            (lambda.clone(), to_hook_coords(lambda)?)
        }
        (None, Some(k)) => {
            let h = HookCoordinates::new(n, k, alpha.cloned().unwrap_or_else(Partition::empty))?;
            (h.to_partition(), h)
        }
        (None, None) => return Err(fail(EXIT_INPUT, "give --lambda or --k")),
    };
    writeln!(out, "lambda: {lambda}")?;
    writeln!(out, "k={} α={}", h.k(), h.inside())?;
    writeln!(out, "coords: {h}")?;
    Ok(EXIT_OK)
}
