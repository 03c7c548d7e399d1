//! Command-line front end. [`run`] does all the work and returns the exit code
//! with the report, so it can be driven without a process.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complex::{Complex, Face, Universe};
use crate::error::{Error, Result};
use crate::expansion::{expand_complex, expand_ideal, stanley_reisner_ideal, ExpansionVector};
use crate::graph::{decide_k_shellable_graph, duplicate, find_k_simplicial_sets, independence_complex, Graph, Strategy};
use crate::ideal::MonomialIdeal;
use crate::io;
use crate::shelling::{
    check_condition_b, condition_c_violation, find_k_shelling, verify_k_shelling, Outcome, SearchOptions,
    SearchReport, ShellingCertificate, ShellingOrder,
};
use crate::stanley::{build_filtration, hilbert_function, sdepth_bound_check, stanley_decomposition, verify_partition};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;
/// A self-check failed; this indicates a bug rather than bad input.
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Direct,
    Recursive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Direct => Strategy::Direct,
            StrategyArg::Recursive => Strategy::Recursive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    /// Verify a facet order and report both certificate diagnostics.
    CheckOrder,
    /// Search for a k-shelling order.
    Search,
    /// Apply the expansion functor to a complex.
    ExpandComplex,
    /// Apply the expansion functor to a monomial ideal.
    ExpandIdeal,
    /// Stanley–Reisner ideal of a complex.
    SrIdeal,
    /// Independence complex of a graph.
    Indep,
    /// Duplicate graph vertices.
    Duplicate,
    /// List the k-simplicial sets of a graph.
    SimplicialSets,
    /// Decide k-shellability of a graph's independence complex.
    DecideGraph,
    /// Stanley decomposition from a k-shelling, with partition and bound checks.
    Stanley,
    /// Hilbert function of the face ring up to the maximum degree.
    Hilbert,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct Options {
    /// Input file; `-` reads standard input.
    pub input: PathBuf,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated positive multiplicities.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Option<Vec<usize>>,
    #[arg(long, default_value_t = 5)]
    pub max_degree: u32,
    #[arg(long, value_enum, default_value_t = StrategyArg::Direct)]
    pub strategy: StrategyArg,
    /// Search timeout in seconds.
    #[arg(long, default_value_t = 60.0)]
    pub timeout: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Return the lexicographically least order and keep output reproducible.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub deterministic: bool,
    /// Comma-separated 0-based facet indices (check-order, stanley).
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    /// Target for the Stanley depth bound.
    #[arg(long)]
    pub target: Option<usize>,
    /// Treat the stanley input as unexpanded and expand it uniformly by k first.
    #[arg(long)]
    pub expand: bool,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "kshell", version, about = "k-shellability, expansions and Stanley decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Clone, Debug, Subcommand)]
pub enum CliCommand {
    /// Verify a facet order and report both certificate diagnostics.
    CheckOrder(Options),
    /// Search for a k-shelling order.
    Search(Options),
    /// Apply the expansion functor to a complex.
    ExpandComplex(Options),
    /// Apply the expansion functor to a monomial ideal.
    ExpandIdeal(Options),
    /// Stanley–Reisner ideal of a complex.
    SrIdeal(Options),
    /// Independence complex of a graph.
    Indep(Options),
    /// Duplicate graph vertices.
    Duplicate(Options),
    /// List the k-simplicial sets of a graph.
    SimplicialSets(Options),
    /// Decide k-shellability of a graph's independence complex.
    DecideGraph(Options),
    /// Stanley decomposition from a k-shelling, with partition and bound checks.
    Stanley(Options),
    /// Hilbert function of the face ring up to the maximum degree.
    Hilbert(Options),
}

/// A fully parsed invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub options: Options,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        use CliCommand as C;
        let (command, options) = match cli.command {
            C::CheckOrder(o) => (Command::CheckOrder, o),
            C::Search(o) => (Command::Search, o),
            C::ExpandComplex(o) => (Command::ExpandComplex, o),
            C::ExpandIdeal(o) => (Command::ExpandIdeal, o),
            C::SrIdeal(o) => (Command::SrIdeal, o),
            C::Indep(o) => (Command::Indep, o),
            C::Duplicate(o) => (Command::Duplicate, o),
            C::SimplicialSets(o) => (Command::SimplicialSets, o),
            C::DecideGraph(o) => (Command::DecideGraph, o),
            C::Stanley(o) => (Command::Stanley, o),
            C::Hilbert(o) => (Command::Hilbert, o),
        };
        RunConfig { command, options }
    }
}

/// Exit code and the text to print on standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub exit: i32,
    pub output: String,
}

impl Report {
    fn new(exit: i32, output: String) -> Self {
        Report { exit, output }
    }
}

pub fn run(config: &RunConfig) -> Report {
    match dispatch(config) {
        Ok(report) => report,
        Err(e) => {
            let exit = if e.is_input_error() { EXIT_INPUT } else { EXIT_INTERNAL };
            Report::new(exit, format!("error: {e}\n"))
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::domain(format!("cannot read standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn require_k(o: &Options) -> Result<usize> {
    match o.k {
        Some(0) => Err(Error::domain("--k must be at least 1")),
        Some(k) => Ok(k),
        None => Err(Error::domain("this command needs --k")),
    }
}

fn alpha_for(o: &Options, n: usize) -> Result<ExpansionVector> {
    match (&o.alpha, o.k) {
        (Some(a), _) => {
            if a.len() != n {
                return Err(Error::domain(format!("--alpha has {} entries for {n} vertices", a.len())));
            }
            ExpansionVector::new(a.clone())
        }
        (None, Some(k)) => ExpansionVector::uniform(k, n),
        (None, None) => Err(Error::domain("this command needs --alpha or --k")),
    }
}

fn search_options(o: &Options) -> Result<SearchOptions> {
    if !o.timeout.is_finite() || o.timeout < 0.0 {
        return Err(Error::domain("--timeout must be a non-negative number of seconds"));
    }
    Ok(SearchOptions {
        deterministic: o.deterministic,
        timeout: Some(Duration::from_secs_f64(o.timeout)),
        parallel: !o.deterministic,
        ..SearchOptions::default()
    })
}

fn labels(u: &Universe, f: Face) -> Vec<String> {
    u.face_labels(f)
}

fn faces_json(u: &Universe, faces: &[Face]) -> Value {
    Value::from(faces.iter().map(|&f| labels(u, f)).collect::<Vec<_>>())
}

fn faces_text(u: &Universe, faces: &[Face]) -> String {
    faces
        .iter()
        .map(|&f| io::face_text(u, f))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// `r!`, or `None` past `u128`.
fn factorial(r: usize) -> Option<u128> {
    (1..=r as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}

fn search_space(r: usize) -> String {
    factorial(r).map_or_else(|| format!("{r}! (exceeds 2^128)"), |v| v.to_string())
}

fn dispatch(config: &RunConfig) -> Result<Report> {
    let o = &config.options;
    let text = read_input(&o.input)?;
    match config.command {
        Command::CheckOrder => check_order(o, &io::parse_complex(&text)?),
        Command::Search => search(o, &io::parse_complex(&text)?),
        Command::ExpandComplex => {
            let c = io::parse_complex(&text)?;
            let e = expand_complex(&c, &alpha_for(o, c.universe().len())?)?;
            Ok(Report::new(EXIT_ACCEPT, emit_complex(o, &e)))
        }
        Command::ExpandIdeal => {
            let i = io::parse_ideal(&text)?;
            let e = expand_ideal(&i, &alpha_for(o, i.variables().len())?)?;
            Ok(Report::new(EXIT_ACCEPT, emit_ideal(o, &e)))
        }
        Command::SrIdeal => {
            let c = io::parse_complex(&text)?;
            Ok(Report::new(EXIT_ACCEPT, emit_ideal(o, &stanley_reisner_ideal(&c)?)))
        }
        Command::Indep => {
            let g = io::parse_graph(&text)?;
            Ok(Report::new(EXIT_ACCEPT, emit_complex(o, &independence_complex(&g))))
        }
        Command::Duplicate => {
            let g = io::parse_graph(&text)?;
            let d = duplicate(&g, &alpha_for(o, g.num_vertices())?)?;
            Ok(Report::new(EXIT_ACCEPT, emit_graph(o, &d)))
        }
        Command::SimplicialSets => simplicial_sets(o, &io::parse_graph(&text)?),
        Command::DecideGraph => decide_graph(o, &io::parse_graph(&text)?),
        Command::Stanley => stanley(o, &io::parse_complex(&text)?),
        Command::Hilbert => hilbert(o, &io::parse_complex(&text)?),
    }
}

fn emit_complex(o: &Options, c: &Complex) -> String {
    match o.format {
        OutputFormat::Text => io::write_complex(c),
        OutputFormat::Json => pretty(&serde_json::to_value(io::complex_to_json(c)).expect("serializable")),
    }
}

fn emit_ideal(o: &Options, i: &MonomialIdeal) -> String {
    match o.format {
        OutputFormat::Text => io::write_ideal(i),
        OutputFormat::Json => pretty(&serde_json::to_value(io::ideal_to_json(i)).expect("serializable")),
    }
}

fn emit_graph(o: &Options, g: &Graph) -> String {
    match o.format {
        OutputFormat::Text => io::write_graph(g),
        OutputFormat::Json => pretty(&serde_json::to_value(io::graph_to_json(g)).expect("serializable")),
    }
}

fn order_for(o: &Options, c: &Complex, k: usize) -> ShellingOrder {
    match &o.order {
        Some(p) => ShellingOrder::new(p.clone(), k),
        None => ShellingOrder::identity(c.num_facets(), k),
    }
}

fn certificate_json(c: &Complex, cert: &ShellingCertificate) -> Value {
    let u = c.universe();
    let steps: Vec<Value> = cert
        .steps
        .iter()
        .map(|s| {
            json!({
                "j": s.j,
                "intersection_facets": faces_json(u, &s.intersection_facets),
                "sigmas": faces_json(u, &s.sigmas),
                "restriction_sets": s.restriction_sets.as_ref().map(|r| faces_json(u, r)),
            })
        })
        .collect();
    json!({
        "k": cert.k,
        "order": cert.order,
        "steps": steps,
        "accepted": cert.accepted(),
        "failure": cert.failure.as_ref().map(|f| json!({
            "j": f.j,
            "condition": f.condition.code(),
        })),
    })
}

fn check_order(o: &Options, c: &Complex) -> Result<Report> {
    let k = require_k(o)?;
    let order = order_for(o, c, k);
    let cert = verify_k_shelling(c, &order)?;
    let b = check_condition_b(c, &order)?;
    let c_violation = condition_c_violation(c, &order)?;
    let exit = if cert.accepted() { EXIT_ACCEPT } else { EXIT_REJECT };
    let u = c.universe();
    let output = match o.format {
        OutputFormat::Json => {
            let mut v = certificate_json(c, &cert);
            v["condition_b"] = json!({ "holds": b.holds, "first_failure": b.first_failure() });
            v["condition_c"] = json!({
                "holds": c_violation.is_none(),
                "violation": c_violation.map(|(i, j)| [i, j]),
            });
            pretty(&v)
        }
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "order: {:?}  k = {k}", order.permutation).unwrap();
            for step in &cert.steps {
                writeln!(
                    s,
                    "step {}: {}  intersection facets: {}  sigmas: {}",
                    step.j,
                    io::face_text(u, step.facet),
                    faces_text(u, &step.intersection_facets),
                    faces_text(u, &step.sigmas)
                )
                .unwrap();
            }
            match &cert.failure {
                None => writeln!(s, "accepted").unwrap(),
                Some(f) => writeln!(s, "rejected at step {}: condition ({})", f.j, f.condition.code()).unwrap(),
            }
            match b.first_failure() {
                None => writeln!(s, "condition (b): holds").unwrap(),
                Some(j) => writeln!(s, "condition (b): fails at step {j}").unwrap(),
            }
            match c_violation {
                None => writeln!(s, "condition (c): holds").unwrap(),
                Some((i, j)) => writeln!(s, "condition (c): fails for i = {i}, j = {j}").unwrap(),
            }
            s
        }
    };
    Ok(Report::new(exit, output))
}

fn outcome_exit(outcome: &Outcome) -> i32 {
    match outcome {
        Outcome::Found(_) => EXIT_ACCEPT,
        Outcome::NotFound => EXIT_REJECT,
        Outcome::Undecided => EXIT_UNDECIDED,
    }
}

fn outcome_name(outcome: &Outcome) -> &'static str {
    match outcome {
        Outcome::Found(_) => "found",
        Outcome::NotFound => "not_found",
        Outcome::Undecided => "undecided",
    }
}

fn search_report(o: &Options, c: &Complex, k: usize, report: &SearchReport) -> String {
    let u = c.universe();
    let ordered = report.order().map(|ord| ord.facets(c));
    match o.format {
        OutputFormat::Json => pretty(&json!({
            "k": k,
            "outcome": outcome_name(&report.outcome),
            "order": report.order().map(|ord| ord.permutation.clone()),
            "facets": ordered.as_ref().map(|f| faces_json(u, f)),
            "num_facets": report.num_facets,
            "search_space": search_space(report.num_facets),
            "nodes_visited": report.nodes_visited,
            "deepest_prefix": report.deepest_prefix,
        })),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "outcome: {}  k = {k}", outcome_name(&report.outcome)).unwrap();
            if let (Some(ord), Some(f)) = (report.order(), &ordered) {
                writeln!(s, "order: {:?}", ord.permutation).unwrap();
                writeln!(s, "facets: {}", faces_text(u, f)).unwrap();
            }
            writeln!(
                s,
                "facets: {}  search space: {}  nodes visited: {}  deepest prefix: {}",
                report.num_facets,
                search_space(report.num_facets),
                report.nodes_visited,
                report.deepest_prefix
            )
            .unwrap();
            s
        }
    }
}

fn search(o: &Options, c: &Complex) -> Result<Report> {
    let k = require_k(o)?;
    let report = find_k_shelling(c, k, &search_options(o)?)?;
    Ok(Report::new(outcome_exit(&report.outcome), search_report(o, c, k, &report)))
}

fn simplicial_sets(o: &Options, g: &Graph) -> Result<Report> {
    let k = require_k(o)?;
    let found = find_k_simplicial_sets(g, k);
    let u = g.vertices();
    let exit = if found.is_empty() { EXIT_REJECT } else { EXIT_ACCEPT };
    let output = match o.format {
        OutputFormat::Json => pretty(&json!({
            "k": k,
            "sets": found.iter().map(|(s, parts)| json!({
                "set": labels(u, *s),
                "parts": faces_json(u, parts),
            })).collect::<Vec<_>>(),
        })),
        OutputFormat::Text => {
            let mut s = String::new();
            for (set, parts) in &found {
                writeln!(s, "{}  parts: {}", io::face_text(u, *set), faces_text(u, parts)).unwrap();
            }
            if found.is_empty() {
                writeln!(s, "no {k}-simplicial sets").unwrap();
            }
            s
        }
    };
    Ok(Report::new(exit, output))
}

fn decide_graph(o: &Options, g: &Graph) -> Result<Report> {
    let k = require_k(o)?;
    let decision = decide_k_shellable_graph(g, k, o.strategy.into(), &search_options(o)?)?;
    let c = &decision.complex;
    let u = c.universe();
    let ordered = match &decision.outcome {
        Outcome::Found(ord) => Some(ord.facets(c)),
        _ => None,
    };
    let output = match o.format {
        OutputFormat::Json => pretty(&json!({
            "k": k,
            "strategy": match o.strategy { StrategyArg::Direct => "direct", StrategyArg::Recursive => "recursive" },
            "outcome": outcome_name(&decision.outcome),
            "complex": io::complex_to_json(c),
            "order": ordered.as_ref().map(|f| faces_json(u, f)),
        })),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "outcome: {}  k = {k}", outcome_name(&decision.outcome)).unwrap();
            writeln!(s, "independence complex facets: {}", faces_text(u, c.facets())).unwrap();
            if let Some(f) = &ordered {
                writeln!(s, "order: {}", faces_text(u, f)).unwrap();
            }
            s
        }
    };
    Ok(Report::new(outcome_exit(&decision.outcome), output))
}

fn stanley(o: &Options, input: &Complex) -> Result<Report> {
    let k = require_k(o)?;
    let (complex, default_target) = if o.expand {
        let e = expand_complex(input, &ExpansionVector::uniform(k, input.universe().len())?)?;
        (e, input.dimension().ok().map(|d| (d + 1) as usize))
    } else {
        let size = input.facets().first().map(|f| f.len());
        (input.clone(), size.filter(|s| s % k == 0).map(|s| s / k))
    };
    let target = o
        .target
        .or(default_target)
        .ok_or_else(|| Error::domain("cannot infer the depth target; pass --target"))?;
    let order = match &o.order {
        Some(p) => ShellingOrder::new(p.clone(), k),
        None => {
            let report = find_k_shelling(&complex, k, &search_options(o)?)?;
            match report.outcome {
                Outcome::Found(ord) => ord,
                other => {
                    return Ok(Report::new(
                        outcome_exit(&other),
                        format!("no {k}-shelling order: {}\n", outcome_name(&other)),
                    ))
                }
            }
        }
    };
    build_filtration(&complex, &order)?;
    let decomposition = stanley_decomposition(&complex, &order)?;
    let partition_ok = verify_partition(&decomposition, &complex, o.max_degree);
    let bound = sdepth_bound_check(&decomposition, target);
    let ok = partition_ok && bound.pass && bound.closed_form_ok;
    let exit = if ok { EXIT_ACCEPT } else { EXIT_REJECT };
    let u = complex.universe();
    let output = match o.format {
        OutputFormat::Json => pretty(&json!({
            "order": order.permutation,
            "spaces": decomposition.spaces.iter().map(|s| json!({
                "i": s.i,
                "j": s.j,
                "u": s.u.format(u),
                "Z": labels(u, s.z),
            })).collect::<Vec<_>>(),
            "min_Z": bound.min_z,
            "target": target,
            "partition_ok": partition_ok,
            "max_degree": o.max_degree,
            "closed_form_ok": bound.closed_form_ok,
        })),
        OutputFormat::Text => {
            let mut s = String::new();
            writeln!(s, "order: {:?}  k = {k}", order.permutation).unwrap();
            for sp in &decomposition.spaces {
                writeln!(s, "({}, {})  {} K[{}]", sp.i, sp.j, sp.u.format(u), labels(u, sp.z).join(" ")).unwrap();
            }
            writeln!(s, "partition up to degree {}: {}", o.max_degree, if partition_ok { "ok" } else { "FAILED" }).unwrap();
            writeln!(s, "min |Z| = {}  target = {target}  bound: {}", bound.min_z, if bound.pass { "ok" } else { "FAILED" }).unwrap();
            writeln!(s, "closed form: {}", if bound.closed_form_ok { "ok" } else { "FAILED" }).unwrap();
            s
        }
    };
    Ok(Report::new(exit, output))
}

fn hilbert(o: &Options, c: &Complex) -> Result<Report> {
    let values: Vec<u128> = (0..=o.max_degree).map(|d| hilbert_function(c, d)).collect();
    let output = match o.format {
        // Values can exceed the JSON-safe integer range, so they are strings.
        OutputFormat::Json => pretty(&json!({
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })),
        OutputFormat::Text => values
            .iter()
            .enumerate()
            .map(|(d, v)| format!("{d} {v}\n"))
            .collect(),
    };
    Ok(Report::new(EXIT_ACCEPT, output))
}
