//! The `gyro` command-line harness.
//!
//! Every command writes one JSON report (stdout or `--output`). Exit codes:
//! 0 when every check passes, 1 when a property fails, 2 on input errors.
//! Reports contain no timestamps or host data, so the same command and seed
//! produce byte-identical output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::axioms::{check_axioms, check_difference_identities, check_gyrator_weld};
use crate::base::{build_chain, MAX_DEPTH};
use crate::check::CheckSuite;
use crate::error::{GyroError, Result};
use crate::gyro::{Gyrogroup, Radial, Sampling};
use crate::models::{
    check_associativity, make_group_adapter, validate_table, CayleyTable, EinsteinBall, MobiusDisk,
    TableGyrogroup, DEFAULT_TOLERANCE,
};
use crate::prenorm::{
    build_dyadic_family, gyration_invariance_check, metric_axiom_check, sandwich_check,
    DyadicFamily,
};
use crate::subquotient::{
    is_l_subgyrogroup, is_subgyrogroup, left_cosets, q_image, SubgyroCandidate,
};

pub const TOOL: &str = "gyrometric";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// ρ-table CSVs stop at this level; deeper grids have too many rows to emit.
pub const CSV_MAX_LEVEL: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "gyro",
    version,
    about = "Gyrogroup axiom checks and prenorm metrics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check G1-G4, the automorphism law and the difference identities.
    VerifyAxioms(Common),
    /// Exhaustively validate a Cayley table.
    ValidateTable(Common),
    /// Build the chain, dyadic family and prenorm, then check the metric.
    BuildMetric(MetricArgs),
    /// Check the prenorm sandwich inclusions level by level.
    Sandwich(SandwichArgs),
    /// Validate an L-subgyrogroup and print its left cosets.
    Quotient(QuotientArgs),
    /// Image of pairs under (x, y) -> x + (-y) and the identity separation test.
    QImage(QImageArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// mobius | einstein | table:PATH | group:PATH
    #[arg(long, default_value = "mobius")]
    pub model: ModelSpec,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Equality tolerance; defaults to 1e-9 for continuous models and 0 for tables.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ChainArgs {
    #[arg(long, default_value_t = 0.8)]
    pub r0: f64,
    #[arg(long, default_value_t = 12)]
    pub depth: usize,
}

#[derive(Debug, Clone, Args)]
pub struct MetricArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub chain: ChainArgs,
    /// Write the ρ table (q,value) here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write pairwise metric values (x,y,value) of sampled points here.
    #[arg(long)]
    pub metric_csv: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    pub metric_points: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SandwichArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub chain: ChainArgs,
    /// Single level to check; all levels 1..depth-1 when omitted.
    #[arg(long)]
    pub level: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated element labels of H.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sub: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct QImageArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated label pairs `x:y` (table models).
    #[arg(long, value_delimiter = ',')]
    pub pairs: Vec<String>,
    /// Add a diagonal pair (x, x) for every sampled pair (continuous models).
    #[arg(long)]
    pub diagonal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelSpec {
    Mobius,
    Einstein,
    Table(PathBuf),
    Group(PathBuf),
}

impl FromStr for ModelSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "mobius" => Ok(ModelSpec::Mobius),
            "einstein" => Ok(ModelSpec::Einstein),
            _ => {
                if let Some(p) = s.strip_prefix("table:") {
                    Ok(ModelSpec::Table(p.into()))
                } else if let Some(p) = s.strip_prefix("group:") {
                    Ok(ModelSpec::Group(p.into()))
                } else {
                    Err(format!(
                        "unknown model {s:?}; expected mobius, einstein, table:PATH or group:PATH"
                    ))
                }
            }
        }
    }
}

impl std::fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelSpec::Mobius => write!(f, "mobius"),
            ModelSpec::Einstein => write!(f, "einstein"),
            ModelSpec::Table(p) => write!(f, "table:{}", p.display()),
            ModelSpec::Group(p) => write!(f, "group:{}", p.display()),
        }
    }
}

enum Loaded {
    Mobius(MobiusDisk),
    Einstein(EinsteinBall),
    Table(TableGyrogroup),
    /// The table parsed but is not a gyrogroup (or not a group).
    Rejected(CheckSuite),
}

fn load(spec: &ModelSpec, tol: f64) -> Result<Loaded> {
    Ok(match spec {
        ModelSpec::Mobius => Loaded::Mobius(MobiusDisk::with_tolerance(tol)),
        ModelSpec::Einstein => Loaded::Einstein(EinsteinBall::with_tolerance(tol)),
        ModelSpec::Table(path) => {
            let t = CayleyTable::from_path(path)?;
            let suite = validate_table(&t)?;
            if suite.passed {
                Loaded::Table(crate::models::make_table_gyrogroup(t)?)
            } else {
                Loaded::Rejected(suite)
            }
        }
        ModelSpec::Group(path) => {
            let t = CayleyTable::from_path(path)?;
            match make_group_adapter(t.clone()) {
                Ok(m) => Loaded::Table(m),
                Err(GyroError::NotAssociative { .. }) => Loaded::Rejected(CheckSuite::new(
                    "group-adapter",
                    None,
                    vec![check_associativity(&t)],
                )),
                Err(GyroError::TableInvalid { .. }) => Loaded::Rejected(validate_table(&t)?),
                Err(e) => return Err(e),
            }
        }
    })
}

fn default_tolerance(spec: &ModelSpec) -> f64 {
    match spec {
        ModelSpec::Mobius | ModelSpec::Einstein => DEFAULT_TOLERANCE,
        _ => 0.0,
    }
}

#[derive(Debug, Serialize)]
struct Report {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    model: String,
    seed: u64,
    samples: usize,
    tolerance: f64,
    passed: bool,
    max_violation: f64,
    suites: Vec<CheckSuite>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
}

impl Report {
    fn new(command: &'static str, common: &Common, tol: f64, suites: Vec<CheckSuite>) -> Self {
        Report {
            tool: TOOL,
            version: VERSION,
            command,
            model: common.model.to_string(),
            seed: common.seed,
            samples: common.samples,
            tolerance: tol,
            passed: suites.iter().all(|s| s.passed),
            max_violation: suites
                .iter()
                .map(CheckSuite::max_violation)
                .fold(0.0, f64::max),
            suites,
            result: None,
        }
    }

    fn with_result(mut self, result: Value, passed: bool) -> Self {
        self.result = Some(result);
        self.passed &= passed;
        self
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((report, output)) => match emit(&report, output.as_deref(), out) {
            Ok(()) => {
                if report.passed {
                    0
                } else {
                    1
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(report: &Report, output: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    match output {
        Some(path) => write_file(path, &text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| GyroError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| GyroError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn execute(command: &Command) -> Result<(Report, Option<PathBuf>)> {
    let (report, common) = match command {
        Command::VerifyAxioms(c) => (verify_axioms(c)?, c),
        Command::ValidateTable(c) => (validate(c)?, c),
        Command::BuildMetric(a) => (build_metric(a)?, &a.common),
        Command::Sandwich(a) => (sandwich(a)?, &a.common),
        Command::Quotient(a) => (quotient(a)?, &a.common),
        Command::QImage(a) => (q_image_cmd(a)?, &a.common),
    };
    Ok((report, common.output.clone()))
}

fn resolve(common: &Common) -> Result<(f64, Sampling)> {
    let tol = common
        .tol
        .unwrap_or_else(|| default_tolerance(&common.model));
    if tol.is_nan() || tol < 0.0 {
        return Err(GyroError::Input(format!(
            "tolerance {tol} must be nonnegative"
        )));
    }
    if common.samples == 0 {
        return Err(GyroError::Input("--samples must be at least 1".into()));
    }
    Ok((tol, Sampling::new(common.seed, common.samples)))
}

fn axiom_suites<M: Gyrogroup>(m: &M, s: &Sampling, tol: f64) -> Vec<CheckSuite> {
    let mut axioms = check_axioms(m, s, tol);
    axioms.extend(CheckSuite::new(
        "weld",
        None,
        vec![check_gyrator_weld(m, s, tol)],
    ));
    vec![axioms, check_difference_identities(m, s, tol)]
}

pub fn cmd_verify_axioms(common: &Common) -> Result<i32> {
    verify_axioms(common).map(|r| if r.passed { 0 } else { 1 })
}

fn verify_axioms(common: &Common) -> Result<Report> {
    let (tol, s) = resolve(common)?;
    let suites = match load(&common.model, tol)? {
        Loaded::Mobius(m) => axiom_suites(&m, &s, tol),
        Loaded::Einstein(m) => axiom_suites(&m, &s, tol),
        Loaded::Table(m) => axiom_suites(&m, &s, tol),
        Loaded::Rejected(suite) => vec![suite],
    };
    Ok(Report::new("verify-axioms", common, tol, suites))
}

fn validate(common: &Common) -> Result<Report> {
    let (tol, _) = resolve(common)?;
    let path = match &common.model {
        ModelSpec::Table(p) | ModelSpec::Group(p) => p,
        other => {
            return Err(GyroError::Input(format!(
                "validate-table needs a table model, got {other}"
            )))
        }
    };
    let table = CayleyTable::from_path(path)?;
    let mut suite = validate_table(&table)?;
    if matches!(common.model, ModelSpec::Group(_)) {
        suite.extend(CheckSuite::new(
            "group",
            None,
            vec![check_associativity(&table)],
        ));
    }
    Ok(Report::new("validate-table", common, tol, vec![suite]))
}

fn family_for(chain: &ChainArgs) -> Result<DyadicFamily> {
    if !(chain.r0 > 0.0 && chain.r0 < 1.0) {
        return Err(GyroError::Input(format!(
            "--r0 {} outside (0, 1)",
            chain.r0
        )));
    }
    if chain.depth == 0 || chain.depth > MAX_DEPTH {
        return Err(GyroError::Input(format!(
            "--depth {} outside 1..={MAX_DEPTH}",
            chain.depth
        )));
    }
    build_dyadic_family(&build_chain(chain.r0, chain.depth)?, chain.depth)
}

fn metric_suites<M: Radial>(
    m: &M,
    f: &DyadicFamily,
    s: &Sampling,
    tol: f64,
) -> Result<Vec<CheckSuite>> {
    let mut suites = vec![f.audit()];
    for n in 1..f.depth() {
        suites.push(sandwich_check(f, m, n, s)?);
    }
    suites.push(metric_axiom_check(f, m, s, tol));
    suites.push(CheckSuite::new(
        "gyration-invariance",
        Some(s.seed),
        vec![gyration_invariance_check(f, m, s)],
    ));
    Ok(suites)
}

fn metric_table<M: Radial>(m: &M, f: &DyadicFamily, s: &Sampling, points: usize) -> String {
    let mut rng = s.rng(70);
    let pts: Vec<M::Element> = (0..points).map(|_| m.sample(&mut rng)).collect();
    let mut csv = String::from("x,y,value\n");
    for x in &pts {
        for y in &pts {
            let v = f.prenorm_of_norm(m.norm(&m.add(&m.neg(x), y)));
            csv.push_str(&format!("\"{}\",\"{}\",{v:.16e}\n", m.label(x), m.label(y)));
        }
    }
    csv
}

pub fn cmd_build_metric(args: &MetricArgs) -> Result<i32> {
    build_metric(args).map(|r| if r.passed { 0 } else { 1 })
}

fn build_metric(args: &MetricArgs) -> Result<Report> {
    let (tol, s) = resolve(&args.common)?;
    let f = family_for(&args.chain)?;
    if let Some(path) = &args.csv {
        write_file(path, &f.rho_csv(CSV_MAX_LEVEL))?;
    }
    let (suites, table) = match load(&args.common.model, tol)? {
        Loaded::Mobius(m) => (
            metric_suites(&m, &f, &s, tol)?,
            metric_table(&m, &f, &s, args.metric_points),
        ),
        Loaded::Einstein(m) => (
            metric_suites(&m, &f, &s, tol)?,
            metric_table(&m, &f, &s, args.metric_points),
        ),
        Loaded::Table(m) => (
            metric_suites(&m, &f, &s, tol)?,
            metric_table(&m, &f, &s, args.metric_points),
        ),
        Loaded::Rejected(suite) => (vec![suite], String::new()),
    };
    if let Some(path) = &args.metric_csv {
        write_file(path, &table)?;
    }
    let chain: Vec<f64> = (0..=f.depth()).map(|n| f.chain_radius(n)).collect();
    Ok(
        Report::new("build-metric", &args.common, tol, suites).with_result(
            json!({
                "r0": args.chain.r0,
                "depth": f.depth(),
                "grid_step": f.grid_step(),
                "chain": chain,
            }),
            true,
        ),
    )
}

fn sandwich(args: &SandwichArgs) -> Result<Report> {
    let (tol, s) = resolve(&args.common)?;
    let f = family_for(&args.chain)?;
    let levels: Vec<usize> = match args.level {
        Some(n) => vec![n],
        None => (1..f.depth()).collect(),
    };
    fn run_levels<M: Radial>(
        m: &M,
        f: &DyadicFamily,
        levels: &[usize],
        s: &Sampling,
    ) -> Result<Vec<CheckSuite>> {
        levels.iter().map(|&n| sandwich_check(f, m, n, s)).collect()
    }
    let suites = match load(&args.common.model, tol)? {
        Loaded::Mobius(m) => run_levels(&m, &f, &levels, &s)?,
        Loaded::Einstein(m) => run_levels(&m, &f, &levels, &s)?,
        Loaded::Table(m) => run_levels(&m, &f, &levels, &s)?,
        Loaded::Rejected(suite) => vec![suite],
    };
    Ok(Report::new("sandwich", &args.common, tol, suites))
}

fn table_model(
    spec: &ModelSpec,
    tol: f64,
    command: &str,
) -> Result<std::result::Result<TableGyrogroup, CheckSuite>> {
    match load(spec, tol)? {
        Loaded::Table(m) => Ok(Ok(m)),
        Loaded::Rejected(suite) => Ok(Err(suite)),
        _ => Err(GyroError::Input(format!(
            "{command} needs a table or group model"
        ))),
    }
}

fn quotient(args: &QuotientArgs) -> Result<Report> {
    let (tol, s) = resolve(&args.common)?;
    let m = match table_model(&args.common.model, tol, "quotient")? {
        Ok(m) => m,
        Err(suite) => return Ok(Report::new("quotient", &args.common, tol, vec![suite])),
    };
    let h = SubgyroCandidate::from_labels(&m, &args.sub)?;
    let mut sub = is_subgyrogroup(&m, &h);
    // L-invariance presupposes a subgyrogroup
    if sub.passed {
        sub.extend(CheckSuite::new(
            "l-subgyrogroup",
            None,
            vec![is_l_subgyrogroup(&m, &h, &s)],
        ));
    }
    let labels: Vec<String> = h.members().iter().map(|i| m.label(i)).collect();
    if !sub.passed {
        return Ok(Report::new("quotient", &args.common, tol, vec![sub])
            .with_result(json!({ "sub": labels }), false));
    }
    let report = Report::new("quotient", &args.common, tol, vec![sub]);
    Ok(match left_cosets(&m, &h) {
        Ok(p) => report.with_result(json!({ "sub": labels, "partition": p.to_json(&m) }), true),
        Err(e @ (GyroError::NotAPartition { .. } | GyroError::UnevenCosets { .. })) => {
            report.with_result(json!({ "sub": labels, "error": e.to_string() }), false)
        }
        Err(e) => return Err(e),
    })
}

fn q_image_cmd(args: &QImageArgs) -> Result<Report> {
    let (tol, s) = resolve(&args.common)?;
    fn sampled<M: Gyrogroup>(m: &M, s: &Sampling, diagonal: bool) -> Result<Value> {
        let mut rng = s.rng(80);
        let mut pairs = Vec::with_capacity(s.samples * 2);
        for _ in 0..s.samples {
            let x = m.sample(&mut rng);
            let y = m.sample(&mut rng);
            if diagonal {
                pairs.push((x.clone(), x.clone()));
            }
            pairs.push((x, y));
        }
        let img = q_image(m, &pairs)?;
        Ok(json!({
            "pairs": pairs.len(),
            "meets_diagonal": diagonal,
            "contains_identity": img.contains_identity,
            "min_distance": img.min_distance,
            "separation_holds": img.contains_identity == diagonal,
        }))
    }
    let result = match load(&args.common.model, tol)? {
        Loaded::Mobius(m) => sampled(&m, &s, args.diagonal)?,
        Loaded::Einstein(m) => sampled(&m, &s, args.diagonal)?,
        Loaded::Table(m) => {
            if args.pairs.is_empty() {
                return Err(GyroError::Input(
                    "--pairs is required for table models".into(),
                ));
            }
            let pairs = args
                .pairs
                .iter()
                .map(|p| {
                    let (x, y) = p
                        .split_once(':')
                        .ok_or_else(|| GyroError::Input(format!("pair {p:?} is not x:y")))?;
                    Ok((m.table().index_of(x)?, m.table().index_of(y)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let meets_diagonal = pairs.iter().any(|(x, y)| x == y);
            let img = q_image(&m, &pairs)?;
            let image: Vec<String> = img.points.iter().map(|p| m.label(p)).collect();
            json!({
                "pairs": pairs.len(),
                "image": image,
                "meets_diagonal": meets_diagonal,
                "contains_identity": img.contains_identity,
                "separation_holds": img.contains_identity == meets_diagonal,
            })
        }
        Loaded::Rejected(suite) => {
            return Ok(Report::new("q-image", &args.common, tol, vec![suite]));
        }
    };
    let holds = result["separation_holds"].as_bool().unwrap_or(false);
    Ok(Report::new("q-image", &args.common, tol, Vec::new()).with_result(result, holds))
}
