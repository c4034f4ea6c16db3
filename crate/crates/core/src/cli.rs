//! Command-line front end. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 validation failure, 2 crosscheck mismatch,
//! 3 parse error, 4 cap exceeded.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bwb::{bwb_solve, BwbError, BwbResult, FlagBundle};
use crate::cech_oracle::{CechOracle, OracleError};
use crate::fan_toric::{
    toric_cohomology_with, validate_fan, Caps, Fan, FanError, GradedCohomologyTable, ToricDivisor,
};
use crate::horospherical::{
    horo_cohomology_with, HoroCohomologyReport, HoroError, HorosphericalModel,
};
use crate::root_system::RootSystemError;
use crate::schema::{parse_input, FanFile, InputFile, ModelFile, SchemaError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "horocoh",
    version,
    about = "Line bundle cohomology on horospherical varieties"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Emit machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of rays for chamber enumeration.
    #[arg(long, global = true, default_value_t = 14, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_rays: u64,
    /// Maximum size of W/W_P when enumerating coset representatives.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_coset: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check a fan or model file.
    Validate { input: PathBuf },
    /// Borel–Weil–Bott on the flag factor of a model file.
    Bwb { input: PathBuf },
    /// Graded cohomology of the divisor in a fan file.
    Toric {
        input: PathBuf,
        /// Also run the Čech oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        radius: Option<i64>,
    },
    /// Cohomology on a horospherical model.
    Horo { input: PathBuf },
    /// Čech totals over a box of weights.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        radius: i64,
    },
    /// Compare both toric pipelines; with `--range R` sweep every divisor
    /// with coefficients in `[-R, R]`.
    Crosscheck {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        range: Option<i64>,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        radius: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
}

/// Everything one invocation needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub caps: Caps,
    pub max_coset: usize,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        RunConfig {
            command: cli.command,
            format: if cli.options.json {
                OutputFormat::Json
            } else {
                OutputFormat::Table
            },
            caps: Caps {
                max_rays: cli.options.max_rays as usize,
                ..Caps::default()
            },
            max_coset: cli.options.max_coset as usize,
        }
    }
}

/// Error carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

impl From<FanError> for Failure {
    fn from(e: FanError) -> Self {
        let code = match e {
            FanError::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<RootSystemError> for Failure {
    fn from(e: RootSystemError) -> Self {
        let code = match e {
            RootSystemError::CapExceeded(_) => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BwbError> for Failure {
    fn from(e: BwbError) -> Self {
        match e {
            BwbError::RootSystem(inner) => inner.into(),
            other => Failure::new(EXIT_INVALID, other.to_string()),
        }
    }
}

impl From<HoroError> for Failure {
    fn from(e: HoroError) -> Self {
        match e {
            HoroError::Fan(inner) => inner.into(),
            HoroError::Flag(inner) => inner.into(),
            other => Failure::new(EXIT_INVALID, other.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::TooManyCharts(_) | OracleError::TooManyRays => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_PARSE, e.to_string())
    }
}

/// Runs one subcommand; returns the process exit code.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

fn read_input(path: &PathBuf) -> Result<InputFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok(parse_input(&text)?)
}

fn expect_fan(input: InputFile) -> Result<FanFile, Failure> {
    match input {
        InputFile::Fan(f) => Ok(f),
        InputFile::Model(_) => Err(Failure::new(
            EXIT_PARSE,
            "expected a fan file, got a model file",
        )),
    }
}

fn expect_model(input: InputFile) -> Result<ModelFile, Failure> {
    match input {
        InputFile::Model(m) => Ok(m),
        InputFile::Fan(_) => Err(Failure::new(
            EXIT_PARSE,
            "expected a model file (missing `root_type`)",
        )),
    }
}

fn checked_fan(fan: &Fan, err: &mut dyn Write) -> Result<(), Failure> {
    if let Err(violations) = validate_fan(fan) {
        for v in &violations {
            writeln!(err, "{v}")?;
        }
        return Err(Failure::new(
            EXIT_INVALID,
            format!("fan has {} violation(s)", violations.len()),
        ));
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn format_weight(m: &[i64]) -> String {
    let inner: Vec<String> = m.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

pub fn write_toric_table(
    out: &mut dyn Write,
    table: &GradedCohomologyTable,
) -> std::io::Result<()> {
    writeln!(out, "n\tl\tq\tm\tdim")?;
    for q in 0..=table.dim {
        for e in &table.entries {
            if e.dims[q] != 0 {
                writeln!(out, "{q}\t0\t{q}\t{}\t{}", format_weight(&e.m), e.dims[q])?;
            }
        }
    }
    let totals: Vec<String> = table.totals.iter().map(ToString::to_string).collect();
    writeln!(out, "totals\t{}", totals.join("\t"))
}

pub fn write_horo_table(out: &mut dyn Write, report: &HoroCohomologyReport) -> std::io::Result<()> {
    match &report.flag_factor {
        BwbResult::Vanishing => writeln!(out, "flag factor: vanishing")?,
        BwbResult::Nonvanishing {
            degree,
            highest_weight,
            dimension,
            word,
        } => writeln!(
            out,
            "flag factor: l={degree} mu={highest_weight} dim={dimension} w={word} (dual module)"
        )?,
    }
    let ell = match &report.flag_factor {
        BwbResult::Nonvanishing { degree, .. } => degree.to_string(),
        BwbResult::Vanishing => "-".to_string(),
    };
    let flag_dim = match &report.flag_factor {
        BwbResult::Nonvanishing { dimension, .. } => *dimension,
        BwbResult::Vanishing => 0,
    };
    writeln!(out, "n\tl\tq\tm\tdim")?;
    for row in &report.degrees {
        for e in &row.toric_entries {
            writeln!(
                out,
                "{}\t{ell}\t{}\t{}\t{}",
                row.n,
                e.q,
                format_weight(&e.m),
                flag_dim * e.dim
            )?;
        }
    }
    let totals: Vec<String> = report.totals().iter().map(ToString::to_string).collect();
    writeln!(out, "totals\t{}", totals.join("\t"))
}

fn dispatch(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let json = config.format == OutputFormat::Json;
    match &config.command {
        Command::Validate { input } => validate(read_input(input)?, config, out, err),
        Command::Bwb { input } => {
            let model = expect_model(read_input(input)?)?;
            let datum = model.datum()?;
            let spec = model.spec(&datum)?;
            let bundle = FlagBundle::new(datum, spec, model.divisor.colors.clone())?;
            let result = bwb_solve(&bundle)?;
            if json {
                emit_json(out, &result)?;
            } else {
                match &result {
                    BwbResult::Vanishing => writeln!(out, "vanishing: all cohomology is zero")?,
                    BwbResult::Nonvanishing {
                        degree,
                        highest_weight,
                        dimension,
                        word,
                    } => {
                        writeln!(out, "degree\thighest_weight\tdim\tword")?;
                        writeln!(out, "{degree}\t{highest_weight}\t{dimension}\t{word}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Toric {
            input,
            oracle,
            radius,
        } => {
            let file = expect_fan(read_input(input)?)?;
            let fan = file.fan();
            checked_fan(&fan, err)?;
            let divisor = file.divisor()?;
            let table = toric_cohomology_with(&fan, &divisor, config.caps)?;
            if json {
                emit_json(out, &table)?;
            } else {
                write_toric_table(out, &table)?;
            }
            if *oracle {
                let r = radius.unwrap_or(table.support_radius() + 2);
                let cech = CechOracle::new(&fan)?.total(&divisor, r)?;
                if cech != table {
                    writeln!(
                        err,
                        "mismatch: oracle totals {:?} vs {:?}",
                        cech.totals, table.totals
                    )?;
                    return Ok(EXIT_MISMATCH);
                }
                writeln!(err, "oracle agrees (radius {r})")?;
            }
            Ok(EXIT_OK)
        }
        Command::Horo { input } => {
            let file = expect_model(read_input(input)?)?;
            let datum = file.datum()?;
            let spec = file.spec(&datum)?;
            let fan = file.fan();
            checked_fan(&fan, err)?;
            let model = HorosphericalModel::new(datum, spec, fan)?;
            let report = horo_cohomology_with(&model, &file.divisor(), config.caps)?;
            if json {
                emit_json(out, &report)?;
            } else {
                write_horo_table(out, &report)?;
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { input, radius } => {
            let file = expect_fan(read_input(input)?)?;
            let fan = file.fan();
            checked_fan(&fan, err)?;
            let divisor = file.divisor()?;
            if let Ok(table) = toric_cohomology_with(&fan, &divisor, config.caps) {
                if table.support_radius() > *radius {
                    writeln!(
                        err,
                        "warning: box radius {radius} is smaller than the chamber bound {}",
                        table.support_radius()
                    )?;
                }
            }
            let cech = CechOracle::new(&fan)?.total(&divisor, *radius)?;
            if json {
                emit_json(out, &cech)?;
            } else {
                write_toric_table(out, &cech)?;
            }
            Ok(EXIT_OK)
        }
        Command::Crosscheck {
            input,
            range,
            radius,
        } => {
            let file = expect_fan(read_input(input)?)?;
            let fan = file.fan();
            checked_fan(&fan, err)?;
            let divisors = match range {
                Some(r) => {
                    let span = (2 * r + 1) as u64;
                    let count = (0..fan.num_rays()).try_fold(1u64, |acc, _| acc.checked_mul(span));
                    match count {
                        Some(c) if c <= 1_000_000 => all_divisors(fan.num_rays(), *r),
                        _ => {
                            return Err(Failure::new(EXIT_CAP, "divisor sweep larger than 1000000"))
                        }
                    }
                }
                None => vec![file.divisor()?],
            };
            let oracle = CechOracle::new(&fan)?;
            let mut mismatches = 0usize;
            for divisor in &divisors {
                let table = toric_cohomology_with(&fan, divisor, config.caps)?;
                let r = radius.unwrap_or(0).max(table.support_radius() + 2);
                let cech = oracle.total(divisor, r)?;
                if cech != table {
                    mismatches += 1;
                    writeln!(
                        err,
                        "mismatch at divisor {:?}: chambers {:?}, oracle {:?}",
                        divisor.0, table.totals, cech.totals
                    )?;
                }
            }
            if json {
                emit_json(
                    out,
                    &serde_json::json!({ "divisors": divisors.len(), "mismatches": mismatches }),
                )?;
            } else {
                writeln!(
                    out,
                    "crosscheck: {} divisor(s), {mismatches} mismatch(es)",
                    divisors.len()
                )?;
            }
            Ok(if mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

fn validate(
    input: InputFile,
    config: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    match input {
        InputFile::Fan(file) => {
            let fan = file.fan();
            checked_fan(&fan, err)?;
            if file.divisor.is_some() {
                file.divisor()?;
            }
            writeln!(
                out,
                "ok: fan of dimension {} with {} rays and {} maximal cones",
                fan.dim,
                fan.num_rays(),
                fan.max_cones.len()
            )?;
        }
        InputFile::Model(file) => {
            let datum = file.datum()?;
            let spec = file.spec(&datum)?;
            let fan = file.fan();
            checked_fan(&fan, err)?;
            let reps = datum.minimal_coset_reps(&spec, config.max_coset)?;
            let model = HorosphericalModel::new(datum, spec, fan)?;
            crate::horospherical::split_divisor(&model, &file.divisor())?;
            writeln!(
                out,
                "ok: {} with Levi set {:?}, |W^P| = {}, fiber of dimension {}, total dimension {}",
                model.datum.type_label(),
                model.spec.levi_set,
                reps.len(),
                model.fan.dim,
                model.dimension()
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// Every divisor with coefficients in `[-range, range]`, lexicographic.
pub fn all_divisors(num_rays: usize, range: i64) -> Vec<ToricDivisor> {
    let lo = vec![-range; num_rays];
    let hi = vec![range; num_rays];
    let mut all = Vec::new();
    let _ = crate::fan_toric::for_each_lattice_point(&lo, &hi, |a| {
        all.push(ToricDivisor(a.to_vec()));
        Ok::<(), ()>(())
    });
    all
}
