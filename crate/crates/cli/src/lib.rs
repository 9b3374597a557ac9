//! Command line front end: argument parsing, dispatch to the verification
//! engine, and report rendering.

pub mod document;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieho::funcalc::{full_character, FunctorShape, MultilinearBasis};
use lieho::homology::{self, SuiteReport};
use lieho::symchar::Multiplicity;
use serde_json::json;

pub use document::{ReportDocument, Results, Status, Timings, SCHEMA_ID};

const SHAPE_HELP: &str = "Shapes are slots joined by '*', without whitespace: \
L<k> is the k-th exterior power, G<k> the k-th divided power, T<k> stands for k \
separate tensor factors. Example: L3*T1*T1.";

#[derive(Debug, Parser)]
#[command(name = "lieho", version, about = "Exact verification of homology of free Lie algebras with adjoint tensor coefficients", after_help = SHAPE_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Rejected: nothing here is random.
    #[arg(long, global = true, hide = true, num_args = 0..=1)]
    pub seed_order: Option<Option<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Decompose H0 and H1 in one weight.
    Homology(HomologyArgs),
    /// Decompose the multilinear component of a shape.
    #[command(after_help = SHAPE_HELP)]
    Character(CharacterArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Theorem,
    Identities,
    R3,
    Inductive,
    LowerBound,
    SmallN,
    R1,
    Differential,
    Intersections,
    Euler,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    H0,
    H1,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// `a..b` (inclusive) or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRange(pub RangeInclusive<usize>);

impl FromStr for RRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid range '{s}'"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
                if a > b {
                    return Err(format!("empty range '{s}'"));
                }
                Ok(RRange(a..=b))
            }
            None => parse(s).map(|a| RRange(a..=a)),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub scope: Scope,
    /// Values of r, as `a..b` or a single number.
    #[arg(long = "r")]
    pub r: Option<RRange>,
    /// Allow r = 5 (minutes of exact elimination).
    #[arg(long)]
    pub deep: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    #[arg(long = "r")]
    pub r: usize,
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub which: Which,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CharacterArgs {
    #[arg(long)]
    pub shape: String,
    /// Number of letters; must equal the total degree of the shape.
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failed run: usage problems exit with 2, engine failures with 1.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Engine(lieho::Error),
}

impl From<lieho::Error> for Failure {
    fn from(e: lieho::Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Engine(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(s) => write!(f, "usage error: {s}"),
            Failure::Engine(e) => write!(f, "computation failed: {e}"),
        }
    }
}

const MAX_DEFAULT_R: usize = 4;

fn check_depth(range: &RRange, deep: bool) -> Result<(), Failure> {
    let top = *range.0.end();
    if top > 5 {
        return Err(Failure::Usage(format!("r = {top} is beyond what the verifier supports (at most 5)")));
    }
    if top > MAX_DEFAULT_R && !deep {
        return Err(Failure::Usage(format!("r = {top} needs --deep")));
    }
    Ok(())
}

fn default_range(scope: Scope, deep: bool) -> RRange {
    let top = if deep { 5 } else { MAX_DEFAULT_R };
    match scope {
        Scope::Inductive => RRange(4..=top),
        Scope::LowerBound => RRange(2..=top),
        _ => RRange(1..=top),
    }
}

pub fn run_verify(args: &VerifyArgs) -> Result<Vec<SuiteReport>, Failure> {
    let range = args.r.clone().unwrap_or_else(|| default_range(args.scope, args.deep));
    check_depth(&range, args.deep)?;
    let scopes: Vec<Scope> = match args.scope {
        Scope::All => vec![
            Scope::Theorem,
            Scope::Identities,
            Scope::R3,
            Scope::Inductive,
            Scope::LowerBound,
            Scope::SmallN,
            Scope::R1,
            Scope::Differential,
            Scope::Intersections,
            Scope::Euler,
        ],
        s => vec![s],
    };
    let mut out = Vec::new();
    for scope in scopes {
        match scope {
            Scope::Theorem => {
                for r in range.0.clone() {
                    out.push(homology::verify_theorem(r)?);
                }
            }
            Scope::Identities => out.push(homology::verify_identities()?),
            Scope::R3 => out.push(homology::verify_r3_case()?),
            Scope::Inductive => {
                if args.scope == Scope::Inductive && *range.0.start() < 4 {
                    if let Err(e) = homology::verify_inductive_step(*range.0.start()) {
                        return Err(Failure::Usage(e.to_string()));
                    }
                }
                for r in range.0.clone().filter(|&r| r >= 4) {
                    out.push(homology::verify_inductive_step(r)?);
                }
            }
            Scope::LowerBound => {
                for r in range.0.clone().filter(|&r| r >= 2) {
                    out.push(homology::lower_bound_check(r)?);
                }
            }
            Scope::SmallN => out.push(homology::verify_small_n(6)?),
            Scope::R1 => out.push(homology::verify_r1_exactness(6)?),
            Scope::Differential => out.push(homology::verify_differential(4)?),
            Scope::Intersections => out.push(homology::verify_intersections()?),
            Scope::Euler => out.push(homology::verify_euler(MAX_DEFAULT_R)?),
            Scope::All => unreachable!(),
        }
    }
    Ok(out)
}

pub fn run_homology(args: &HomologyArgs) -> Result<homology::HomologyReport, Failure> {
    if args.r > 5 + 1 || args.n > args.r + 3 && args.n > 8 {
        return Err(Failure::Usage(format!("(r, n) = ({}, {}) is too large", args.r, args.n)));
    }
    let mut report = match args.which {
        Which::H1 => homology::h1_bimodule(args.r, args.n)?,
        Which::H0 | Which::Both => homology::h0_bimodule(args.r, args.n)?,
    };
    if args.which == Which::H0 {
        report.h1 = None;
        report.h1_dim = None;
    }
    Ok(report)
}

pub fn run_character(args: &CharacterArgs) -> Result<(FunctorShape, Vec<Multiplicity>), Failure> {
    let shape: FunctorShape = args.shape.parse().map_err(|e: lieho::Error| Failure::Usage(e.to_string()))?;
    if let Some(n) = args.n {
        if n != shape.total_degree() {
            return Err(Failure::Usage(format!("--n {n} does not match the total degree {} of {shape}", shape.total_degree())));
        }
    }
    if shape.total_degree() > 10 {
        return Err(Failure::Usage(format!("{shape} has more than 10 letters")));
    }
    let basis = MultilinearBasis::new(&shape)?;
    Ok((shape, full_character(&basis).decompose()?))
}

fn inputs(pairs: &[(&str, serde_json::Value)]) -> BTreeMap<String, serde_json::Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn scope_name(s: Scope) -> String {
    s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Runs a parsed command and returns the report.
pub fn execute(cli: &Cli, command_line: &str) -> Result<ReportDocument, Failure> {
    if cli.seed_order.is_some() {
        return Err(Failure::Usage("--seed-order is not supported: every computation is deterministic".into()));
    }
    lieho::init_threads();
    let start = Instant::now();
    let (inputs, status, results) = match &cli.command {
        Command::Verify(a) => {
            let suites = run_verify(a)?;
            let pass = suites.iter().all(SuiteReport::passed);
            let range = a.r.clone().unwrap_or_else(|| default_range(a.scope, a.deep));
            let inputs = inputs(&[
                ("scope", json!(scope_name(a.scope))),
                ("r", json!([range.0.start(), range.0.end()])),
                ("deep", json!(a.deep)),
            ]);
            (inputs, pass, Results::Verify { suites })
        }
        Command::Homology(a) => {
            let report = run_homology(a)?;
            let which = match a.which {
                Which::H0 => "h0",
                Which::H1 => "h1",
                Which::Both => "both",
            };
            let inputs = inputs(&[("r", json!(a.r)), ("n", json!(a.n)), ("which", json!(which))]);
            (inputs, report.passed(), Results::Homology { report })
        }
        Command::Character(a) => {
            let (shape, decomposition) = run_character(a)?;
            let inputs = inputs(&[("shape", json!(shape.to_string()))]);
            let n = shape.total_degree();
            (inputs, true, Results::Character { shape: shape.to_string(), n, decomposition })
        }
    };
    Ok(ReportDocument {
        schema: SCHEMA_ID.into(),
        command: command_line.into(),
        inputs,
        status: if status { Status::Pass } else { Status::Fail },
        results,
        timings: Timings { total_ms: start.elapsed().as_millis() as u64 },
    })
}

/// Renders the document in the requested format.
pub fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Csv => doc.to_csv().unwrap_or_else(|| doc.to_json()),
        Format::Json => doc.to_json() + "\n",
    }
}

pub fn output_target(cli: &Cli) -> (Option<PathBuf>, Format) {
    match &cli.command {
        Command::Verify(a) => (a.out.clone(), Format::Json),
        Command::Homology(a) => (a.out.clone(), a.format),
        Command::Character(a) => (a.out.clone(), a.format),
    }
}

/// Writes `text` to `path` through a temporary file and a rename.
pub fn write_atomically(path: &std::path::Path, text: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)
}

