//! `fibsum`: generate the sum set-graph families, compute their invariants,
//! and run the claim-verification suite.
//!
//! Exit codes are part of the interface: 0 success, 1 usage errors or a
//! suite deviation, 2 capacity (ground set too large to materialize),
//! 3 a budgeted solver gave up, 4 I/O failure.

mod document;
mod export;

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};

use document::GraphDocument;
use fibsum::analysis::{self, HamiltonianOutcome, SolverResult};
use fibsum::generators::{
    gen_fib_sum_graph, gen_fib_sum_set_graph, gen_set_graph, gen_set_graph_of_graph, EdgeSemantics,
};
use fibsum::graphcore::MAX_MATERIALIZE_N;
use fibsum::numseq::{SequenceKind, SumSequence};
use fibsum::setspace::enumerate_subsets;
use fibsum::verify::{self, ClaimStatus, Expectation, SuiteBudgets};

const EXIT_USAGE: i32 = 1;
const EXIT_CAPACITY: i32 = 2;
const EXIT_UNKNOWN: i32 = 3;
const EXIT_IO: i32 = 4;

/// Environment variable raising (or lowering) the default materialization
/// cap of 7, up to the hard cap of 12.
const CAP_ENV: &str = "FIBSUM_MAX_N";
const DEFAULT_CAP: u32 = 7;

#[derive(Parser)]
#[command(name = "fibsum", version, about = "Sum set-graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write JSON (canonical), DOT, or an edge list.
    Generate {
        /// fib_sum | set_graph | fib_sum_set | set_graph_of_graph | popped
        family: String,
        /// Ground-set size (not used with set_graph_of_graph).
        n: Option<u32>,
        /// strict | inclusive
        #[arg(long, default_value = "strict")]
        semantics: String,
        /// fibonacci | lucas
        #[arg(long, default_value = "fibonacci")]
        sequence: String,
        /// Path to a simple-graph JSON document serving as the host
        /// (set_graph_of_graph only).
        #[arg(long)]
        host: Option<PathBuf>,
        /// json | dot | edges
        #[arg(long, default_value = "json")]
        format: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute one invariant of a generated family or a loaded document.
    Analyze {
        /// fib_sum | set_graph | fib_sum_set | set_graph_of_graph | popped
        family: Option<String>,
        n: Option<u32>,
        /// Analyze a previously generated JSON document instead.
        #[arg(long)]
        input: Option<PathBuf>,
        /// degrees | loops | loop_sequence | connected | pendant | eulerian |
        /// hamiltonian | bipartite | clique | eared_clique | chromatic
        #[arg(long)]
        invariant: String,
        #[arg(long, default_value = "strict")]
        semantics: String,
        #[arg(long, default_value = "fibonacci")]
        sequence: String,
        /// Node-expansion budget for the exact solvers.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
    /// Run the claim suite over a range of n and report per-claim outcomes.
    Verify {
        #[arg(long, default_value_t = 1)]
        n_from: u32,
        #[arg(long, default_value_t = 5)]
        n_to: u32,
        /// both | strict | inclusive
        #[arg(long, default_value = "both")]
        semantics: String,
        /// Node-expansion budget for the exact solvers.
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
        /// Write the machine-readable report (one JSON record per line).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_IO,
            message: message.to_string(),
        }
    }
}

impl From<fibsum::Error> for CliError {
    fn from(err: fibsum::Error) -> Self {
        let code = match err {
            fibsum::Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    // Die quietly on SIGPIPE like any other filter-friendly tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return EXIT_USAGE;
        }
    };
    let outcome = match cli.command {
        Command::Generate {
            family,
            n,
            semantics,
            sequence,
            host,
            format,
            out,
        } => cmd_generate(
            &family,
            n,
            &semantics,
            &sequence,
            host.as_deref(),
            &format,
            out.as_deref(),
        ),
        Command::Analyze {
            family,
            n,
            input,
            invariant,
            semantics,
            sequence,
            budget,
        } => cmd_analyze(
            family.as_deref(),
            n,
            input.as_deref(),
            &invariant,
            &semantics,
            &sequence,
            budget,
        ),
        Command::Verify {
            n_from,
            n_to,
            semantics,
            budget,
            report,
        } => cmd_verify(n_from, n_to, &semantics, budget, report.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.code
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Family {
    FibSum,
    SetGraph,
    FibSumSet,
    SetGraphOfGraph,
    Popped,
}

impl Family {
    fn parse(name: &str) -> Result<Self, CliError> {
        match name {
            "fib_sum" => Ok(Family::FibSum),
            "set_graph" => Ok(Family::SetGraph),
            "fib_sum_set" => Ok(Family::FibSumSet),
            "set_graph_of_graph" => Ok(Family::SetGraphOfGraph),
            "popped" => Ok(Family::Popped),
            other => Err(CliError::usage(format!(
                "unknown family `{other}` (expected fib_sum, set_graph, fib_sum_set, \
                 set_graph_of_graph, popped)"
            ))),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Family::FibSum => "fib_sum",
            Family::SetGraph => "set_graph",
            Family::FibSumSet => "fib_sum_set",
            Family::SetGraphOfGraph => "set_graph_of_graph",
            Family::Popped => "popped",
        }
    }
}

fn parse_semantics(value: &str) -> Result<EdgeSemantics, CliError> {
    EdgeSemantics::from_str(value).map_err(CliError::from)
}

fn parse_sequence_kind(value: &str) -> Result<SequenceKind, CliError> {
    match SequenceKind::from_str(value)? {
        SequenceKind::Custom => Err(CliError::usage(
            "custom sequences need an explicit member list and are library-only",
        )),
        kind => Ok(kind),
    }
}

/// The effective materialization cap: `FIBSUM_MAX_N` when set (1..=12),
/// otherwise 7.
fn effective_cap() -> Result<u32, CliError> {
    match std::env::var(CAP_ENV) {
        Err(_) => Ok(DEFAULT_CAP),
        Ok(raw) => match raw.parse::<u32>() {
            Ok(cap) if (1..=MAX_MATERIALIZE_N).contains(&cap) => Ok(cap),
            _ => Err(CliError::usage(format!(
                "{CAP_ENV}={raw} is not an integer in 1..={MAX_MATERIALIZE_N}"
            ))),
        },
    }
}

fn check_cap(n: u32) -> Result<(), CliError> {
    let cap = effective_cap()?;
    if n > cap {
        return Err(CliError {
            code: EXIT_CAPACITY,
            message: format!(
                "n = {n} exceeds the materialization cap {cap} \
                 (override with {CAP_ENV}, hard limit {MAX_MATERIALIZE_N})"
            ),
        });
    }
    Ok(())
}

fn require_n(n: Option<u32>) -> Result<u32, CliError> {
    match n {
        Some(n) if n >= 1 => Ok(n),
        Some(_) => Err(CliError::usage("n must be >= 1")),
        None => Err(CliError::usage("this family requires a ground-set size n")),
    }
}

fn load_document(path: &Path) -> Result<GraphDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("reading {}: {e}", path.display())))?;
    let doc: GraphDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("parsing {}: {e}", path.display())))?;
    if doc.format_version != document::FORMAT_VERSION {
        return Err(CliError::usage(format!(
            "unsupported format_version {} (expected {})",
            doc.format_version,
            document::FORMAT_VERSION
        )));
    }
    Ok(doc)
}

fn build_document(
    family: Family,
    n: Option<u32>,
    sem: EdgeSemantics,
    kind: SequenceKind,
    host: Option<&Path>,
) -> Result<GraphDocument, CliError> {
    if family != Family::SetGraphOfGraph && host.is_some() {
        return Err(CliError::usage("--host only applies to set_graph_of_graph"));
    }
    let mut doc = match family {
        Family::FibSum => {
            let n = require_n(n)?;
            let seq = SumSequence::for_ground_set(kind, n)?;
            let g = gen_fib_sum_graph(n, &seq)?;
            let mut doc = GraphDocument::from_simple(&g, family.as_str(), Some(n), None);
            doc.sequence = Some(kind.to_string());
            doc
        }
        Family::SetGraph => {
            let n = require_n(n)?;
            check_cap(n)?;
            let g = gen_set_graph(n)?;
            let subsets = enumerate_subsets(n)?;
            GraphDocument::from_simple(&g, family.as_str(), Some(n), Some(&subsets))
        }
        Family::FibSumSet => {
            let n = require_n(n)?;
            check_cap(n)?;
            let seq = SumSequence::for_ground_set(kind, n)?;
            let g = gen_fib_sum_set_graph(n, &seq, sem)?;
            let mut doc = GraphDocument::from_multigraph(&g, family.as_str(), Some(n));
            doc.sequence = Some(kind.to_string());
            doc
        }
        Family::Popped => {
            let n = require_n(n)?;
            check_cap(n)?;
            let seq = SumSequence::for_ground_set(kind, n)?;
            let g = gen_fib_sum_set_graph(n, &seq, sem)?;
            let subsets = enumerate_subsets(n)?;
            let mut doc =
                GraphDocument::from_simple(&g.popped(), family.as_str(), Some(n), Some(&subsets));
            doc.sequence = Some(kind.to_string());
            doc
        }
        Family::SetGraphOfGraph => {
            let Some(host_path) = host else {
                return Err(CliError::usage(
                    "set_graph_of_graph requires --host <json document>",
                ));
            };
            if n.is_some() {
                return Err(CliError::usage(
                    "set_graph_of_graph takes its size from the host graph, not n",
                ));
            }
            let host_doc = load_document(host_path)?;
            if !host_doc.is_simple() {
                return Err(CliError::usage(
                    "the host must be a simple graph (fib_sum, set_graph, or popped document)",
                ));
            }
            let host_graph = host_doc.to_simple().map_err(CliError::usage)?;
            check_cap(host_graph.order() as u32)?;
            let g = gen_set_graph_of_graph(&host_graph, sem)?;
            let mut doc = GraphDocument::from_multigraph(&g, family.as_str(), None);
            doc.host = Some(host_doc.identity());
            doc
        }
    };
    doc.semantics = Some(sem.to_string());
    Ok(doc)
}

fn cmd_generate(
    family: &str,
    n: Option<u32>,
    semantics: &str,
    sequence: &str,
    host: Option<&Path>,
    format: &str,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let family = Family::parse(family)?;
    let sem = parse_semantics(semantics)?;
    let kind = parse_sequence_kind(sequence)?;
    let doc = build_document(family, n, sem, kind, host)?;
    let rendered = match format {
        "json" => {
            let mut text =
                serde_json::to_string_pretty(&doc).map_err(|e| CliError::usage(e.to_string()))?;
            text.push('\n');
            text
        }
        "dot" => export::to_dot(&doc),
        "edges" => export::to_edge_list(&doc),
        other => {
            return Err(CliError::usage(format!(
                "unknown format `{other}` (expected json, dot, edges)"
            )))
        }
    };
    match out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::io(format!("writing {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(0)
}

const INVARIANTS: [&str; 11] = [
    "degrees",
    "loops",
    "loop_sequence",
    "connected",
    "pendant",
    "eulerian",
    "hamiltonian",
    "bipartite",
    "clique",
    "eared_clique",
    "chromatic",
];

fn cmd_analyze(
    family: Option<&str>,
    n: Option<u32>,
    input: Option<&Path>,
    invariant: &str,
    semantics: &str,
    sequence: &str,
    budget: u64,
) -> Result<i32, CliError> {
    if !INVARIANTS.contains(&invariant) {
        return Err(CliError::usage(format!(
            "unknown invariant `{invariant}` (expected one of {})",
            INVARIANTS.join(", ")
        )));
    }

    let doc = match (input, family) {
        (Some(path), None) => {
            if n.is_some() {
                return Err(CliError::usage("--input replaces the family/n arguments"));
            }
            load_document(path)?
        }
        (None, Some(family)) => {
            let sem = parse_semantics(semantics)?;
            let kind = parse_sequence_kind(sequence)?;
            build_document(Family::parse(family)?, n, sem, kind, None)?
        }
        (Some(_), Some(_)) => {
            return Err(CliError::usage("give either a family or --input, not both"))
        }
        (None, None) => return Err(CliError::usage("give a family and n, or --input <path>")),
    };

    let mg = doc.to_multigraph().map_err(CliError::usage)?;
    let popped = mg.popped();
    println!(
        "# {} semantics={} sequence={} budget={budget}",
        doc.identity(),
        doc.semantics.as_deref().unwrap_or("-"),
        doc.sequence.as_deref().unwrap_or("-"),
    );
    let mut unknown = false;
    match invariant {
        "degrees" => println!("degrees = {:?}", mg.degrees()),
        "loops" => {
            let loops: Vec<u32> = (0..mg.order()).map(|v| mg.loops(v)).collect();
            println!("loops = {loops:?}");
        }
        "loop_sequence" => println!("loop_sequence = {:?}", analysis::loop_sequence(&mg)),
        "connected" => println!("connected = {}", analysis::is_connected_multigraph(&mg)),
        "pendant" => {
            let pendant = analysis::pendant_vertices(&mg);
            let labels: Vec<String> = pendant.iter().map(|&v| doc.vertex_label(v)).collect();
            println!("pendant = {labels:?}");
        }
        "eulerian" => println!("eulerian = {}", analysis::is_eulerian(&mg)),
        "bipartite" => println!("bipartite = {}", analysis::is_bipartite(&popped)),
        "hamiltonian" => match analysis::hamiltonian_cycle(&popped, budget)? {
            HamiltonianOutcome::Cycle(cycle) => {
                println!("hamiltonian = cycle of length {}: {cycle:?}", cycle.len())
            }
            HamiltonianOutcome::Absent => println!("hamiltonian = none"),
            HamiltonianOutcome::Unknown => {
                println!("hamiltonian = unknown (budget exhausted)");
                unknown = true;
            }
        },
        "clique" => match analysis::clique_number(&popped, budget)? {
            SolverResult::Exact(omega) => println!("clique = {omega}"),
            SolverResult::Unknown => {
                println!("clique = unknown (budget exhausted)");
                unknown = true;
            }
        },
        "eared_clique" => match analysis::eared_clique_number(&mg, budget)? {
            SolverResult::Exact(omega) => println!("eared_clique = {omega}"),
            SolverResult::Unknown => {
                println!("eared_clique = unknown (budget exhausted)");
                unknown = true;
            }
        },
        "chromatic" => match analysis::chromatic_number(&popped, budget)? {
            SolverResult::Exact(chi) => println!("chromatic = {chi}"),
            SolverResult::Unknown => {
                println!("chromatic = unknown (budget exhausted)");
                unknown = true;
            }
        },
        _ => unreachable!("validated above"),
    }
    Ok(if unknown { EXIT_UNKNOWN } else { 0 })
}

fn cmd_verify(
    n_from: u32,
    n_to: u32,
    semantics: &str,
    budget: u64,
    report_path: Option<&Path>,
) -> Result<i32, CliError> {
    let modes: Vec<EdgeSemantics> = match semantics {
        "both" => EdgeSemantics::BOTH.to_vec(),
        other => vec![parse_semantics(other)?],
    };
    let budgets = SuiteBudgets {
        solver_nodes: budget,
        ..SuiteBudgets::default()
    };
    let reports = verify::run_suite(n_from, n_to, &modes, &budgets)?;

    println!(
        "claim suite: n = {n_from}..{n_to}, semantics = {}, solver budget = {budget}",
        modes
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("+"),
    );
    println!(
        "{:<16} {:>3}  {:<9} {:<14} NOTE",
        "CLAIM", "N", "SEMANTICS", "STATUS"
    );
    for r in &reports {
        let mut note = match r.status {
            ClaimStatus::Fail => r.witness.clone().unwrap_or_default(),
            _ => r.detail.clone().unwrap_or_default(),
        };
        if r.status == ClaimStatus::Fail
            && verify::expectation(r.claim, r.n, r.semantics) == Expectation::Observational
        {
            note.push_str(" [observational]");
        }
        println!(
            "{:<16} {:>3}  {:<9} {:<14} {note}",
            r.claim.as_str(),
            r.n,
            r.semantics.to_string(),
            r.status.as_str(),
        );
    }

    let counts = |status: ClaimStatus| reports.iter().filter(|r| r.status == status).count();
    let deviations = verify::deviations(&reports);
    println!(
        "summary: {} checks, {} pass, {} fail, {} skipped, {} not applicable; {} deviation(s)",
        reports.len(),
        counts(ClaimStatus::Pass),
        counts(ClaimStatus::Fail),
        counts(ClaimStatus::SkippedBudget),
        counts(ClaimStatus::NotApplicable),
        deviations.len(),
    );

    if let Some(path) = report_path {
        let mut lines = String::new();
        for r in &reports {
            let line =
                serde_json::to_string(r).map_err(|e| CliError::io(format!("serializing: {e}")))?;
            lines.push_str(&line);
            lines.push('\n');
        }
        std::fs::write(path, lines)
            .map_err(|e| CliError::io(format!("writing {}: {e}", path.display())))?;
    }

    if deviations.is_empty() {
        Ok(0)
    } else {
        for d in &deviations {
            eprintln!(
                "deviation: {} at n = {} ({}): {}",
                d.claim,
                d.n,
                d.semantics,
                d.witness.as_deref().unwrap_or("no witness")
            );
        }
        Ok(EXIT_USAGE)
    }
}
