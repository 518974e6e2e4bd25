//! The `tb` command-line front end.
//!
//! Commands render to a [`Outcome`] holding the report text and the process
//! exit code, so the binary is a thin wrapper and everything here can be
//! exercised from tests.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bip::{bip_bound, thm54_bound};
use crate::bounds::{
    best_bound_with, doubly_regular_bounds, drt_bound_exact, parity_refine, BoundSummary, MethodFamily,
};
use crate::digraph::{classify, Digraph};
use crate::field::{paley_tournament, prime_power};
use crate::io::read_digraph;
use crate::search::{max_transitive_bb_with, max_transitive_brute, SearchOptions, SearchResult, BRUTE_FORCE_LIMIT};
use crate::spectral::spectrum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TIME_LIMIT: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

/// Environment variable capping the worker threads; 0 or unset means one
/// per core.
pub const THREADS_ENV: &str = "TB_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            exit_code: EXIT_OK,
        }
    }
}

/// Where a digraph comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    File(PathBuf),
    Paley { p: u64, deg: u32 },
    Transitive(usize),
    Cycle(usize),
}

fn parse_count(kind: &str, text: &str) -> Result<u64, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{kind}: expected a non-negative integer, got {text:?}")))
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let Some((kind, arg)) = s.split_once(':') else {
            return Ok(GraphSpec::File(PathBuf::from(s)));
        };
        match kind {
            "paley" => {
                if let Some((p, deg)) = arg.split_once('^') {
                    let p = parse_count("paley", p)?;
                    let deg = u32::try_from(parse_count("paley", deg)?)
                        .map_err(|_| CliError::Input(format!("paley: degree too large in {arg:?}")))?;
                    Ok(GraphSpec::Paley { p, deg })
                } else {
                    let q = parse_count("paley", arg)?;
                    let (p, deg) = prime_power(q).map_err(|e| CliError::Input(format!("paley:{q}: {e}")))?;
                    Ok(GraphSpec::Paley { p, deg })
                }
            }
            "transitive" => Ok(GraphSpec::Transitive(parse_count("transitive", arg)? as usize)),
            "cycle" => Ok(GraphSpec::Cycle(parse_count("cycle", arg)? as usize)),
            _ => Ok(GraphSpec::File(PathBuf::from(s))),
        }
    }
}

impl GraphSpec {
    pub fn label(&self) -> String {
        match self {
            GraphSpec::File(p) => p.display().to_string(),
            GraphSpec::Paley { p, deg: 1 } => format!("paley:{p}"),
            GraphSpec::Paley { p, deg } => format!("paley:{p}^{deg}"),
            GraphSpec::Transitive(s) => format!("transitive:{s}"),
            GraphSpec::Cycle(n) => format!("cycle:{n}"),
        }
    }

    pub fn resolve(&self) -> Result<Digraph, CliError> {
        let input = |e: &dyn std::fmt::Display| CliError::Input(format!("{}: {e}", self.label()));
        match self {
            GraphSpec::File(path) => read_file(path),
            GraphSpec::Paley { p, deg } => paley_tournament(*p, *deg).map_err(|e| input(&e)),
            GraphSpec::Transitive(s) => Digraph::transitive(*s).map_err(|e| input(&e)),
            GraphSpec::Cycle(n) => Digraph::cycle(*n).map_err(|e| input(&e)),
        }
    }
}

fn read_file(path: &Path) -> Result<Digraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => CliError::Input(format!("{}: file not found", path.display())),
        _ => CliError::Input(format!("{}: {e}", path.display())),
    })?;
    read_digraph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Accepts `60s` or a bare `60`, in seconds.
pub fn parse_time_limit(s: &str) -> Result<Duration, String> {
    let digits = s.strip_suffix('s').unwrap_or(s);
    let secs: f64 = digits
        .parse()
        .map_err(|_| format!("expected seconds such as 60s, got {s:?}"))?;
    Duration::try_from_secs_f64(secs).map_err(|e| format!("{s:?}: {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    #[default]
    Md,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Interlacing,
    Hoffman,
    Drt,
    Bip,
    Thm54,
    All,
}

fn families(methods: &[MethodArg]) -> Vec<MethodFamily> {
    if methods.is_empty() || methods.contains(&MethodArg::All) {
        return MethodFamily::ALL.to_vec();
    }
    let mut out: Vec<MethodFamily> = methods
        .iter()
        .map(|m| match m {
            MethodArg::Interlacing => MethodFamily::Interlacing,
            MethodArg::Hoffman => MethodFamily::Hoffman,
            MethodArg::Drt => MethodFamily::Drt,
            MethodArg::Bip => MethodFamily::Bip,
            MethodArg::Thm54 => MethodFamily::Thm54,
            MethodArg::All => unreachable!(),
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Parser)]
#[command(
    name = "tb",
    version,
    about = "Bounds and exact search for transitive subtournaments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on the largest transitive subtournament.
    Bound(BoundArgs),
    /// Exact maximum transitive subtournament.
    Search(SearchArgs),
    /// Seidel spectrum with main angles.
    Spectrum(SpectrumArgs),
    /// The interlacing value π/(2·arccot √v) for doubly regular orders.
    Table1(Table1Args),
    /// Upper bounds and exact maxima for doubly regular tournaments.
    Table2(Table2Args),
    /// Hoffman, closed-form and polynomial bounds per m, where v = 4m-1.
    Bip(BipArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// paley:q, paley:p^deg, transitive:s, cycle:n, or a file path.
    pub graph: Option<String>,
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
}

impl GraphArgs {
    fn spec(&self) -> Result<GraphSpec, CliError> {
        match (&self.graph, &self.graph_file) {
            (Some(_), Some(_)) => Err(CliError::Input("give either a graph or --graph-file, not both".into())),
            (Some(g), None) => g.parse(),
            (None, Some(p)) => Ok(GraphSpec::File(p.clone())),
            (None, None) => Err(CliError::Input("no graph given".into())),
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub method: Vec<MethodArg>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Exhaustive subset enumeration instead of branch and bound.
    #[arg(long)]
    pub brute: bool,
    #[arg(long, value_parser = parse_time_limit)]
    pub time_limit: Option<Duration>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = 35)]
    pub max_v: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct Table2Args {
    #[arg(long, default_value_t = 35)]
    pub max_v: u64,
    /// Skip the row for supplied doubly regular tournaments.
    #[arg(long)]
    pub paley_only: bool,
    /// Doubly regular tournaments to search for the maximum row.
    #[arg(long = "graph-file")]
    pub graph_files: Vec<PathBuf>,
    /// Per search.
    #[arg(long, value_parser = parse_time_limit)]
    pub time_limit: Option<Duration>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BipArgs {
    /// Values of m; defaults to 1..=max-m.
    pub m: Vec<u64>,
    #[arg(long, default_value_t = 30)]
    pub max_m: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn thread_count() -> Result<usize, CliError> {
    match std::env::var(THREADS_ENV) {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{THREADS_ENV}: expected a thread count, got {s:?}"))),
        _ => Ok(0),
    }
}

/// Runs one command inside a thread pool sized by `TB_THREADS`.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| CliError::Input(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Bound(a) => cmd_bound(&a.graph.spec()?, &families(&a.method), a.format),
        Command::Search(a) => cmd_search(&a.graph.spec()?, a.brute, a.time_limit, a.format),
        Command::Spectrum(a) => cmd_spectrum(&a.graph.spec()?, a.format),
        Command::Table1(a) => Ok(Outcome::ok(cmd_table1(a.max_v, a.format))),
        Command::Table2(a) => cmd_table2(a),
        Command::Bip(a) => {
            let ms: Vec<u64> = if a.m.is_empty() {
                (1..=a.max_m).collect()
            } else {
                a.m.clone()
            };
            cmd_bip(&ms, a.format)
        }
    })
}

fn json_text(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|x| x.to_string()).unwrap_or_default()
}

fn render_bounds(label: &str, summary: &BoundSummary, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            out =
                json_text(&json!({ "graph": label, "v": summary.v, "reports": summary.reports, "best": summary.best }));
        }
        Format::Md => {
            writeln!(out, "bounds for {label} (v = {})\n", summary.v).unwrap();
            out.push_str("| method | raw | bound | applicable | exact | notes |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for r in &summary.reports {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.method,
                    opt(r.raw_value.map(|x| format!("{x:.6}"))),
                    opt(r.integer_bound),
                    r.applicable,
                    r.exact,
                    r.notes
                )
                .unwrap();
            }
            writeln!(out, "| best |  | {} |  |  |  |", summary.best).unwrap();
        }
        Format::Csv => {
            out.push_str("method,raw_value,integer_bound,applicable,exact,notes\n");
            for r in &summary.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.method,
                    opt(r.raw_value),
                    opt(r.integer_bound),
                    r.applicable,
                    r.exact,
                    csv_field(&r.notes)
                )
                .unwrap();
            }
            writeln!(out, "best,,{},,,", summary.best).unwrap();
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn cmd_bound(spec: &GraphSpec, families: &[MethodFamily], format: Format) -> Result<Outcome, CliError> {
    let g = spec.resolve()?;
    let summary = best_bound_with(&g, families).map_err(|e| CliError::Numerical(e.to_string()))?;
    Ok(Outcome::ok(render_bounds(&spec.label(), &summary, format)))
}

fn run_search(g: &Digraph, brute: bool, time_limit: Option<Duration>) -> Result<SearchResult, CliError> {
    if brute {
        return max_transitive_brute(g).map_err(|e| CliError::Input(e.to_string()));
    }
    let cutoff = best_bound_with(g, &MethodFamily::ALL)
        .map_err(|e| CliError::Numerical(e.to_string()))?
        .best as usize;
    Ok(max_transitive_bb_with(
        g,
        &SearchOptions {
            time_limit,
            cutoff: Some(cutoff),
            threads: rayon::current_num_threads(),
        },
    ))
}

pub fn cmd_search(
    spec: &GraphSpec,
    brute: bool,
    time_limit: Option<Duration>,
    format: Format,
) -> Result<Outcome, CliError> {
    let g = spec.resolve()?;
    if brute && g.v() > BRUTE_FORCE_LIMIT {
        return Err(CliError::Input(format!(
            "--brute is limited to {BRUTE_FORCE_LIMIT} vertices, {} has {}",
            spec.label(),
            g.v()
        )));
    }
    let r = run_search(&g, brute, time_limit)?;
    let label = spec.label();
    let witness = r.witness.iter().map(usize::to_string).collect::<Vec<_>>();
    let text = match format {
        Format::Json => json_text(&json!({
            "graph": label,
            "v": g.v(),
            "max_size": r.max_size,
            "witness": r.witness,
            "nodes_explored": r.nodes_explored,
            "method": r.method,
            "time_limited": r.time_limited,
        })),
        Format::Md => {
            let size = if r.time_limited {
                format!("≥ {} (time limit)", r.max_size)
            } else {
                r.max_size.to_string()
            };
            format!(
                "| graph | v | max_size | witness | nodes |\n|---|---|---|---|---|\n| {label} | {} | {size} | {} | {} |\n",
                g.v(),
                witness.join(" "),
                r.nodes_explored
            )
        }
        Format::Csv => format!(
            "graph,v,max_size,witness,nodes_explored,time_limited\n{},{},{},{},{},{}\n",
            csv_field(&label),
            g.v(),
            r.max_size,
            witness.join(" "),
            r.nodes_explored,
            r.time_limited
        ),
    };
    Ok(Outcome {
        text,
        exit_code: if r.time_limited { EXIT_TIME_LIMIT } else { EXIT_OK },
    })
}

pub fn cmd_spectrum(spec: &GraphSpec, format: Format) -> Result<Outcome, CliError> {
    let g = spec.resolve()?;
    let s = spectrum(&g).map_err(|e| CliError::Numerical(e.to_string()))?;
    let mut out = String::new();
    match format {
        Format::Json => out = json_text(&json!({ "graph": spec.label(), "v": g.v(), "entries": s.to_json() })),
        Format::Md => {
            out.push_str("| eigenvalue | multiplicity | main angle | main |\n|---|---|---|---|\n");
            for e in s.entries() {
                writeln!(
                    out,
                    "| {:.9} | {} | {:.9} | {} |",
                    e.eigenvalue, e.multiplicity, e.main_angle, e.is_main
                )
                .unwrap();
            }
        }
        Format::Csv => {
            out.push_str("eigenvalue,multiplicity,main_angle,is_main\n");
            for e in s.entries() {
                writeln!(
                    out,
                    "{},{},{},{}",
                    e.eigenvalue, e.multiplicity, e.main_angle, e.is_main
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome::ok(out))
}

/// Doubly regular orders `7, 11, …` up to `max_v`.
fn drt_orders(max_v: u64) -> impl Iterator<Item = u64> {
    (7..=max_v).step_by(4)
}

pub fn table1_value(v: u64) -> f64 {
    let theta = (v as f64).sqrt();
    std::f64::consts::PI / (2.0 * (std::f64::consts::FRAC_PI_2 - theta.atan()))
}

/// Three decimals, ties to even. Formatting works on the exact binary
/// value, so only exactly representable ties are affected.
pub fn three_decimals(x: f64) -> String {
    format!("{x:.3}")
}

pub fn cmd_table1(max_v: u64, format: Format) -> String {
    let rows: Vec<(u64, f64)> = drt_orders(max_v).map(|v| (v, table1_value(v))).collect();
    match format {
        Format::Json => json_text(
            &rows
                .iter()
                .map(|&(v, x)| json!({ "v": v, "value": x, "display": three_decimals(x) }))
                .collect::<Vec<_>>(),
        ),
        Format::Md => {
            let mut out = String::from("| v | π/(2 arccot √v) |\n|---|---|\n");
            for (v, x) in rows {
                writeln!(out, "| {v} | {} |", three_decimals(x)).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("v,value\n");
            for (v, x) in rows {
                writeln!(out, "{v},{}", three_decimals(x)).unwrap();
            }
            out
        }
    }
}

pub const NEEDS_EXTERNAL: &str = "n/a (needs external graph)";
pub const NO_PALEY: &str = "n/a";

/// One cell of an exact-maximum row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Exact(usize),
    /// Search stopped by the time limit.
    AtLeast(usize),
    Unavailable,
    /// No Paley tournament of this order.
    NoPaley,
}

impl Cell {
    fn from_search(r: &SearchResult) -> Self {
        if r.time_limited {
            Cell::AtLeast(r.max_size)
        } else {
            Cell::Exact(r.max_size)
        }
    }

    fn text(&self) -> String {
        match self {
            Cell::Exact(n) => n.to_string(),
            Cell::AtLeast(n) => format!("≥{n} (time limit)"),
            Cell::Unavailable => NEEDS_EXTERNAL.to_string(),
            Cell::NoPaley => NO_PALEY.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Exact(n) => json!(n),
            Cell::AtLeast(n) => json!({ "at_least": n }),
            Cell::Unavailable => json!(NEEDS_EXTERNAL),
            Cell::NoPaley => json!(NO_PALEY),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub v: u64,
    pub upper_bound: u64,
    pub paley: Cell,
    /// `None` when the row was not requested.
    pub maximum: Option<Cell>,
}

fn exact_maximum(g: &Digraph, time_limit: Option<Duration>) -> Result<SearchResult, CliError> {
    run_search(g, g.v() <= 19, time_limit)
}

pub fn table2_rows(args: &Table2Args) -> Result<Vec<Table2Row>, CliError> {
    let mut supplied: Vec<Digraph> = Vec::new();
    for path in &args.graph_files {
        let g = read_file(path)?;
        if classify(&g).m.is_none() {
            return Err(CliError::Input(format!(
                "{}: not a doubly regular tournament",
                path.display()
            )));
        }
        supplied.push(g);
    }
    drt_orders(args.max_v)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|v| {
            let upper_bound = doubly_regular_bounds(v, &MethodFamily::ALL)
                .map_err(|e| CliError::Input(e.to_string()))?
                .best;
            let paley = match prime_power(v) {
                Ok((p, deg)) => {
                    let g = paley_tournament(p, deg).map_err(|e| CliError::Input(e.to_string()))?;
                    Cell::from_search(&exact_maximum(&g, args.time_limit)?)
                }
                Err(_) => Cell::NoPaley,
            };
            let maximum = if args.paley_only {
                None
            } else {
                let mut best: Option<Cell> = None;
                for g in supplied.iter().filter(|g| g.v() as u64 == v) {
                    let cell = Cell::from_search(&exact_maximum(g, args.time_limit)?);
                    best = Some(match (best, cell) {
                        (Some(Cell::Exact(a)), Cell::Exact(b)) => Cell::Exact(a.max(b)),
                        (Some(Cell::Exact(a) | Cell::AtLeast(a)), Cell::Exact(b) | Cell::AtLeast(b)) => {
                            Cell::AtLeast(a.max(b))
                        }
                        (_, c) => c,
                    });
                }
                Some(best.unwrap_or(Cell::Unavailable))
            };
            Ok(Table2Row {
                v,
                upper_bound,
                paley,
                maximum,
            })
        })
        .collect()
}

pub fn cmd_table2(args: &Table2Args) -> Result<Outcome, CliError> {
    let rows = table2_rows(args)?;
    let limited = rows
        .iter()
        .any(|r| matches!(r.paley, Cell::AtLeast(_)) || matches!(r.maximum, Some(Cell::AtLeast(_))));
    let text = match args.format {
        Format::Json => json_text(
            &rows
                .iter()
                .map(|r| {
                    let mut o = json!({ "v": r.v, "upper_bound": r.upper_bound, "paley": r.paley.json() });
                    if let Some(m) = &r.maximum {
                        o["maximum"] = m.json();
                    }
                    o
                })
                .collect::<Vec<_>>(),
        ),
        Format::Md | Format::Csv => {
            let mut lines: Vec<Vec<String>> = vec![
                std::iter::once("v".to_string())
                    .chain(rows.iter().map(|r| r.v.to_string()))
                    .collect(),
                std::iter::once("upper bound".to_string())
                    .chain(rows.iter().map(|r| r.upper_bound.to_string()))
                    .collect(),
            ];
            if !args.paley_only {
                lines.push(
                    std::iter::once("maximum".to_string())
                        .chain(
                            rows.iter()
                                .map(|r| r.maximum.as_ref().map(Cell::text).unwrap_or_default()),
                        )
                        .collect(),
                );
            }
            lines.push(
                std::iter::once("Paley".to_string())
                    .chain(rows.iter().map(|r| r.paley.text()))
                    .collect(),
            );
            let mut out = String::new();
            for (i, line) in lines.iter().enumerate() {
                if args.format == Format::Md {
                    writeln!(out, "| {} |", line.join(" | ")).unwrap();
                    if i == 0 {
                        writeln!(out, "|{}", "---|".repeat(line.len())).unwrap();
                    }
                } else {
                    writeln!(
                        out,
                        "{}",
                        line.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")
                    )
                    .unwrap();
                }
            }
            out
        }
    };
    Ok(Outcome {
        text,
        exit_code: if limited { EXIT_TIME_LIMIT } else { EXIT_OK },
    })
}

/// Per-m comparison of the Hoffman bound with the polynomial bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipRow {
    pub m: u64,
    pub v: u64,
    /// Hoffman bound for doubly regular tournaments, after the parity
    /// refinement.
    pub hoffman: u64,
    pub thm54: crate::bip::Thm54Result,
    pub bip_bound: u64,
    pub best: u64,
}

pub fn bip_row(m: u64) -> Result<BipRow, CliError> {
    if m == 0 {
        return Err(CliError::Input("m must be positive".into()));
    }
    let v = 4 * m - 1;
    let drt = drt_bound_exact(v).map_err(|e| CliError::Input(e.to_string()))?;
    let hoffman = parity_refine(drt, true, v as usize)
        .integer_bound
        .expect("exact bound is applicable");
    let thm54 = thm54_bound(m);
    let bip = bip_bound(m);
    let best = hoffman.min(thm54.bound).min(bip);
    Ok(BipRow {
        m,
        v,
        hoffman,
        thm54,
        bip_bound: bip,
        best,
    })
}

pub fn cmd_bip(ms: &[u64], format: Format) -> Result<Outcome, CliError> {
    let rows = ms.iter().map(|&m| bip_row(m)).collect::<Result<Vec<_>, _>>()?;
    let cases = |r: &BipRow| {
        r.thm54
            .cases
            .iter()
            .map(|c| format!("({}) {}", c.case, c.bound))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let text = match format {
        Format::Json => json_text(&rows),
        Format::Md => {
            let mut out =
                String::from("| m | v | hoffman | closed-form cases | bip | best |\n|---|---|---|---|---|---|\n");
            for r in &rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    r.m,
                    r.v,
                    r.hoffman,
                    cases(r),
                    r.bip_bound,
                    r.best
                )
                .unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("m,v,hoffman,cases,closed_form,bip_bound,best\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.m,
                    r.v,
                    r.hoffman,
                    cases(r),
                    r.thm54.bound,
                    r.bip_bound,
                    r.best
                )
                .unwrap();
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}
