//! Command-line surface.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or I/O
//! error, 3 invalid parameters, 4 unparsable graph6, 5 order cap or budget
//! exceeded.
//!
//! `--workers` and `--timeout-ms` fall back to `PATHPOWER_WORKERS` and
//! `PATHPOWER_TIMEOUT_MS`; flags win over the environment, which wins over
//! the defaults (all available cores, no timeout).

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use pathpower_core::constructions::{
    h_graph, lemma31_witness, lemma32_cases, lemma32_witness, path_extremal_graphs, power_extremal_candidate,
    power_extremal_family, section4_graph, turan_graph, Lemma32Case,
};
use pathpower_core::containment::{contains_path_power_within, contains_subgraph_within};
use pathpower_core::formula::power_path_turan_value;
use pathpower_core::graph::path_power;
use pathpower_core::oracle::decomposition_family;
use pathpower_core::{graph6, Error, Graph, LabeledConstruction};

use crate::budget::Deadline;
use crate::dto;
use crate::io::{parse_graph6_lines, read_text, write_graph6_lines, LineError};
use crate::parallel;
use crate::report::{append_records, read_records, render_csv, Kind, ReportRecord};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "pathpower",
    version,
    about = "Extremal graphs of path powers: constructions, containment, exact oracles"
)]
pub struct Cli {
    /// Worker threads for exhaustive searches.
    #[arg(long, global = true, display_order = 100, env = "PATHPOWER_WORKERS")]
    pub workers: Option<usize>,
    /// Wall-clock limit for searches, in milliseconds.
    #[arg(long, global = true, display_order = 100, env = "PATHPOWER_TIMEOUT_MS")]
    pub timeout_ms: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph family; prints graph6 lines.
    Construct(ConstructArgs),
    /// Decide whether each host contains a pattern.
    Check(CheckArgs),
    /// Evaluate the split formula, optionally against the exhaustive oracle.
    Number(NumberArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compute a decomposition family.
    Decomp(DecompArgs),
    /// Render a JSON-lines report as CSV.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Turan,
    H,
    PathPower,
    PathExtremal,
    PowerExtremal,
    Lemma31,
    Lemma32,
    Section4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    /// Split size for a single power-extremal candidate.
    #[arg(long)]
    pub n0: Option<usize>,
    /// Variant of the path-extremal part, with `--n0`.
    #[arg(long, default_value_t = 0)]
    pub variant: usize,
    /// Case for lemma32 (a, b1, b2); all applicable cases when omitted.
    #[arg(long)]
    pub case: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::G6)]
    pub format: Format,
    /// Write graph6 lines to this path and the role sidecar to `<out>.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// graph6 file of hosts, one per line; `-` for stdin.
    #[arg(long)]
    pub host: PathBuf,
    /// Pattern as a graph6 string.
    #[arg(long, conflicts_with = "path_power", required_unless_present = "path_power")]
    pub pattern: Option<String>,
    /// Pattern P_k^p given as `k p`.
    #[arg(long, num_args = 2, value_names = ["K", "P"])]
    pub path_power: Option<Vec<usize>>,
    /// Append records to this JSON-lines file instead of printing them.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NumberArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub p: usize,
    /// Also run the exhaustive search (n <= 10).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem21,
    Prop25,
    Lemma31,
    Lemma32,
    Section4,
    GapTable,
    Freeness,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub k_min: Option<usize>,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub p_min: Option<usize>,
    #[arg(long)]
    pub p_max: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    /// `default` or a comma list of `k:p` pairs.
    #[arg(long, default_value = "default")]
    pub cases: String,
    /// Append records to this JSON-lines file instead of printing them.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecompArgs {
    /// Target as a graph6 string.
    #[arg(conflicts_with = "path_power", required_unless_present = "path_power")]
    pub target: Option<String>,
    #[arg(long, num_args = 2, value_names = ["K", "P"])]
    pub path_power: Option<Vec<usize>>,
    /// Largest candidate order; defaults to the target order.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// JSON-lines report to summarize.
    #[arg(long)]
    pub input: PathBuf,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A command failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Some verification check failed.
    Assertion(String),
    Usage(String),
    Io(PathBuf, io::Error),
    Parameter(String),
    Parse(String),
    Limit(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Assertion(_) => 1,
            Failure::Usage(_) | Failure::Io(..) => 2,
            Failure::Parameter(_) => 3,
            Failure::Parse(_) => 4,
            Failure::Limit(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Assertion(m)
            | Failure::Usage(m)
            | Failure::Parameter(m)
            | Failure::Parse(m)
            | Failure::Limit(m) => f.write_str(m),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. } => Failure::Parse(msg),
            Error::OrderCap { .. } | Error::BudgetExhausted => Failure::Limit(msg),
            Error::Parameter(_) | Error::VertexOutOfRange { .. } | Error::UndefinedHost => Failure::Parameter(msg),
        }
    }
}

impl From<LineError> for Failure {
    fn from(e: LineError) -> Self {
        match Failure::from(e.error.clone()) {
            Failure::Parse(_) => Failure::Parse(e.to_string()),
            other => other,
        }
    }
}

type Outcome = Result<(), Failure>;

struct Context {
    workers: usize,
    deadline: Deadline,
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

fn pair(v: &[usize]) -> (usize, usize) {
    (v[0], v[1])
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Failure + '_ {
    move |e| Failure::Io(path.to_owned(), e)
}

/// Prints records as JSON lines, or appends them to `out`.
fn emit(records: &[ReportRecord], out: Option<&Path>) -> Outcome {
    match out {
        Some(path) => append_records(path, records).map_err(io_err(path)),
        None => {
            let mut stdout = io::stdout().lock();
            for r in records {
                writeln!(stdout, "{}", r.to_line()).map_err(io_err(Path::new("<stdout>")))?;
            }
            Ok(())
        }
    }
}

fn build(args: &ConstructArgs) -> Result<Vec<LabeledConstruction>, Failure> {
    let name = format!("{:?}", args.family).to_lowercase();
    let n = || require(args.n, "n", &name);
    let k = || require(args.k, "k", &name);
    let p = || require(args.p, "p", &name);
    let built = match args.family {
        Family::Turan => vec![turan_graph(n()?, p()?)?],
        Family::H => vec![h_graph(n()?, k()?, require(args.a, "a", &name)?)?],
        Family::PathPower => {
            let (k, p) = (k()?, p()?);
            let g = path_power(k, p)?;
            let path = (0..k).collect();
            vec![LabeledConstruction::new("path-power", g, vec![("path".into(), path)], vec![("k", k), ("p", p)])]
        }
        Family::PathExtremal => path_extremal_graphs(n()?, k()?)?,
        Family::PowerExtremal => match args.n0 {
            Some(n0) => vec![power_extremal_candidate(n()?, k()?, p()?, n0, args.variant)?],
            None => power_extremal_family(n()?, k()?, p()?)?,
        },
        Family::Lemma31 => vec![lemma31_witness(k()?, p()?)?],
        Family::Lemma32 => {
            let (k, p) = (k()?, p()?);
            let cases = match &args.case {
                Some(c) => vec![c.parse::<Lemma32Case>()?],
                None => lemma32_cases(k, p),
            };
            cases.into_iter().map(|c| lemma32_witness(k, p, c)).collect::<Result<_, _>>()?
        }
        Family::Section4 => vec![section4_graph(k()?, p()?)?],
    };
    Ok(built)
}

fn construction_record(args: &ConstructArgs, built: &[LabeledConstruction]) -> ReportRecord {
    let mut params = Vec::new();
    for (flag, v) in [("n", args.n), ("k", args.k), ("p", args.p), ("a", args.a), ("n0", args.n0)] {
        if let Some(v) = v {
            params.push((flag, v));
        }
    }
    let graphs: Vec<dto::Construction> = built.iter().map(dto::Construction::from).collect();
    let refs = graphs.iter().map(|g| g.graph6.clone()).collect();
    ReportRecord::new(Kind::Construction, &params, serde_json::json!({ "graphs": graphs }), refs)
}

fn construct(args: &ConstructArgs) -> Outcome {
    let built = build(args)?;
    let record = construction_record(args, &built);
    if let Some(out) = &args.out {
        let graphs: Vec<Graph> = built.iter().map(|c| c.graph.clone()).collect();
        write_graph6_lines(out, &graphs).map_err(io_err(out))?;
        let mut sidecar = out.clone().into_os_string();
        sidecar.push(".json");
        let sidecar = PathBuf::from(sidecar);
        let text = serde_json::to_string_pretty(&record).expect("records serialize");
        std::fs::write(&sidecar, text + "\n").map_err(io_err(&sidecar))?;
    }
    match args.format {
        Format::G6 => {
            let mut stdout = io::stdout().lock();
            for c in &built {
                writeln!(stdout, "{}", graph6::encode(&c.graph)).map_err(io_err(Path::new("<stdout>")))?;
            }
            Ok(())
        }
        Format::Json => emit(&[record], None),
    }
}

fn check(args: &CheckArgs, ctx: &Context) -> Outcome {
    let text = read_text(&args.host).map_err(io_err(&args.host))?;
    let hosts = parse_graph6_lines(&text)?;
    let (pattern, band) = match (&args.pattern, &args.path_power) {
        (Some(p), _) => (graph6::decode(p)?, None),
        (None, Some(kp)) => {
            let (k, p) = pair(kp);
            if k == 0 || p == 0 {
                return Err(Failure::Parameter("path power needs k >= 1 and p >= 1".into()));
            }
            (path_power(k, p)?, Some((k, p)))
        }
        (None, None) => unreachable!("clap requires a pattern"),
    };
    let mut records = Vec::new();
    for (i, host) in hosts.iter().enumerate() {
        let found = match band {
            Some((k, p)) => contains_path_power_within(host, k, p, ctx.deadline)?,
            None => contains_subgraph_within(host, &pattern, ctx.deadline)?,
        };
        let mut params = vec![("host_index", i)];
        if let Some((k, p)) = band {
            params.extend([("k", k), ("p", p)]);
        }
        records.push(ReportRecord::new(
            Kind::Containment,
            &params,
            dto::Containment::new(i, host, &pattern, found),
            vec![graph6::encode(host)],
        ));
    }
    emit(&records, args.out.as_deref())
}

fn number(args: &NumberArgs, ctx: &Context) -> Outcome {
    let eval = power_path_turan_value(args.n, args.k, args.p)?;
    let formula = dto::Evaluation::from(&eval);
    let mut result = dto::NumberResult { formula, oracle: None, gap: None };
    let mut refs = Vec::new();
    if args.oracle {
        let pattern = if args.p == 1 { Graph::path(args.k) } else { path_power(args.k, args.p)? };
        let r = parallel::extremal_number(args.n, &pattern, &[], ctx.workers, ctx.deadline)?;
        result.gap = Some(r.value as i64 - eval.value as i64);
        let oracle = dto::Oracle::from(&r);
        refs = oracle.witnesses.clone();
        result.oracle = Some(oracle);
    }
    let kind = if args.oracle { Kind::Oracle } else { Kind::Formula };
    let record = ReportRecord::new(kind, &[("n", args.n), ("k", args.k), ("p", args.p)], result, refs);
    emit(&[record], args.out.as_deref())
}

fn parse_cases(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    if text == "default" {
        return Ok(verify::DEFAULT_DECOMPOSITION_CASES.to_vec());
    }
    text.split(',')
        .map(|item| {
            let (k, p) =
                item.trim().split_once(':').ok_or_else(|| Failure::Usage(format!("case {item:?} is not k:p")))?;
            let num = |s: &str| s.parse::<usize>().map_err(|_| Failure::Usage(format!("case {item:?} is not k:p")));
            Ok((num(k)?, num(p)?))
        })
        .collect()
}

fn verify(args: &VerifyArgs, ctx: &Context) -> Outcome {
    let d = ctx.deadline;
    let records = match args.suite {
        Suite::Theorem21 => {
            verify::path_extremal_suite(args.n_max.unwrap_or(9), args.k_max.unwrap_or(6), ctx.workers, d)?
        }
        Suite::Prop25 => verify::decomposition_suite(&parse_cases(&args.cases)?)?,
        Suite::Lemma31 => verify::matching_witness_suite(args.k_max.unwrap_or(9), args.p_max.unwrap_or(3), d)?,
        Suite::Lemma32 => verify::case_witness_suite(args.k_max.unwrap_or(9), args.p_max.unwrap_or(3), d)?,
        Suite::Section4 => verify::small_order_suite(args.k.unwrap_or(13), args.p.unwrap_or(2), d)?,
        Suite::GapTable => verify::gap_table_suite(
            args.n_max.unwrap_or(10),
            args.k_max.unwrap_or(8),
            args.p_min.unwrap_or(2),
            args.p_max.unwrap_or(3),
            ctx.workers,
            d,
        )?,
        Suite::Freeness => verify::construction_suite(
            args.n_max.unwrap_or(40),
            args.k_min.unwrap_or(6),
            args.k_max.unwrap_or(10),
            args.p_max.unwrap_or(3),
            d,
        )?,
    };
    emit(&records, args.out.as_deref())?;
    let failed: Vec<&ReportRecord> = records.iter().filter(|r| !verify::passed(std::slice::from_ref(r))).collect();
    eprintln!("{} checks, {} failed", records.len(), failed.len());
    match failed.first() {
        None => Ok(()),
        Some(first) => Err(Failure::Assertion(format!("check failed: {}", first.to_line()))),
    }
}

fn decomp(args: &DecompArgs) -> Outcome {
    let (target, mut params) = match (&args.target, &args.path_power) {
        (Some(t), _) => (graph6::decode(t)?, vec![]),
        (None, Some(kp)) => {
            let (k, p) = pair(kp);
            (path_power(k, p)?, vec![("k", k), ("p", p)])
        }
        (None, None) => unreachable!("clap requires a target"),
    };
    let cap = args.cap.unwrap_or(target.order());
    params.push(("cap", cap));
    let fam = decomposition_family(&target, cap)?;
    let result = dto::Decomposition::from(&fam);
    let refs = result.members.clone();
    emit(&[ReportRecord::new(Kind::Decomposition, &params, result, refs)], args.out.as_deref())
}

fn report(args: &ReportArgs) -> Outcome {
    let text = std::fs::read_to_string(&args.input).map_err(io_err(&args.input))?;
    let records = read_records(&text)
        .map_err(|(line, e)| Failure::Parse(format!("{}: line {line}: {e}", args.input.display())))?;
    let csv_err = |e: csv::Error| Failure::Usage(format!("writing CSV: {e}"));
    match &args.out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(io_err(path))?;
            render_csv(&records, file).map_err(csv_err)
        }
        None => render_csv(&records, io::stdout().lock()).map_err(csv_err),
    }
}

pub fn run(cli: Cli) -> Outcome {
    let workers = match cli.workers {
        Some(0) => return Err(Failure::Parameter("--workers must be positive".into())),
        Some(w) => w,
        None => std::thread::available_parallelism().map_or(1, usize::from),
    };
    let ctx = Context { workers, deadline: Deadline::from_millis(cli.timeout_ms) };
    match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Check(a) => check(a, &ctx),
        Command::Number(a) => number(a, &ctx),
        Command::Verify(a) => verify(a, &ctx),
        Command::Decomp(a) => decomp(a),
        Command::Report(a) => report(a),
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}
