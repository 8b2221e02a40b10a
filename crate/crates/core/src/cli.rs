//! The `ekr` command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad arguments or unparseable
//! input, 3 search cap exceeded, 4 a claim of `verify-paper` failed,
//! 5 the sweep found a counterexample.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::claims::{render, run_all, run_criterion};
use crate::ekr::{ekr_status, EkrError, SearchLimits};
use crate::graph::{complete_graph, lex_product, Graph, GraphError};
use crate::graph6::to_graph6;
use crate::indep::independence_number;
use crate::named::{parse_graph_spec, parse_multipartite_spec};
use crate::report::{ekr_json, ekr_text, GraphSummary};
use crate::sweep::sweep_reader;

#[derive(Debug, Parser)]
#[command(
    name = "ekr",
    version,
    about = "Exact EKR checks for independent r-sets of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, size, alpha, mu and star sizes for every r up to alpha.
    Analyze {
        /// Graph name (`dodecahedron`, `spiky_G(3,4)`, `empty(5)`), union
        /// spec (`3,3+3,3`) or graph6 line.
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Decides whether the graph is r-EKR and strictly r-EKR.
    Ekr {
        spec: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Checks every graph of a graph6 stream for r up to mu/2.
    Sweep {
        /// Input file, `-` for stdin.
        #[arg(long = "in", default_value = "-")]
        input: String,
        /// Output CSV file, `-` for stdout.
        #[arg(long)]
        out: String,
        /// Leave out graphs with more vertices.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Prints the lexicographic product G[K_m] as graph6.
    Product {
        spec: String,
        #[arg(long)]
        m: usize,
    },
    /// Runs the regression suite of published and derived claims.
    VerifyPaper {
        /// Run only these criteria (1 to 14).
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    Io,
    Usage,
    SearchCap,
    ClaimFailed,
    Counterexample,
}

impl FailureKind {
    pub fn code(self) -> u8 {
        match self {
            FailureKind::Io => 1,
            FailureKind::Usage => 2,
            FailureKind::SearchCap => 3,
            FailureKind::ClaimFailed => 4,
            FailureKind::Counterexample => 5,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: FailureKind,
    pub message: String,
}

impl Failure {
    fn new(kind: FailureKind, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(FailureKind::Io, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(FailureKind::Usage, e.to_string())
    }
}

impl From<EkrError> for Failure {
    fn from(e: EkrError) -> Self {
        let kind = match e {
            EkrError::SearchCap { .. } => FailureKind::SearchCap,
            _ => FailureKind::Usage,
        };
        Failure::new(kind, e.to_string())
    }
}

fn load(spec: &str, err: &mut dyn Write) -> Result<Graph, Failure> {
    if spec.contains('+') {
        if let Ok((b, d, true)) = parse_multipartite_spec(spec) {
            writeln!(err, "note: part sizes sorted to {b:?} + {d:?}")?;
        }
    }
    Ok(parse_graph_spec(spec)?)
}

/// Runs one parsed command, writing results to `out` and notes to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let limits = SearchLimits::from_env()?;
    match cli.command {
        Command::Analyze { spec, json } => {
            let s = GraphSummary::compute(&load(&spec, err)?);
            if json {
                writeln!(out, "{}", s.json())?;
            } else {
                write!(out, "{}", s.text())?;
            }
        }
        Command::Ekr { spec, r, json } => {
            let g = load(&spec, err)?;
            let alpha = independence_number(&g);
            if r == 0 || r > alpha {
                return Err(Failure::new(
                    FailureKind::Usage,
                    format!("r = {r} is outside 1..={alpha}"),
                ));
            }
            let rep = ekr_status(&g, r, limits)?;
            if json {
                writeln!(out, "{}", ekr_json(&rep))?;
            } else {
                write!(out, "{}", ekr_text(&rep))?;
            }
        }
        Command::Sweep {
            input,
            out: path,
            max_n,
        } => {
            let outcome = if input == "-" {
                sweep_reader(io::stdin().lock(), limits, max_n)?
            } else {
                sweep_reader(BufReader::new(File::open(&input)?), limits, max_n)?
            };
            if path == "-" {
                outcome.write_csv(&mut *out)?;
            } else {
                outcome.write_csv(File::create(&path)?)?;
            }
            for e in &outcome.errors {
                writeln!(err, "line {}: {}", e.line, e.message)?;
            }
            writeln!(err, "{}", outcome.summary())?;
            if outcome.counterexamples() > 0 {
                return Err(Failure::new(
                    FailureKind::Counterexample,
                    "counterexample found",
                ));
            }
            if outcome.errors.iter().any(|e| e.search_cap) {
                return Err(Failure::new(
                    FailureKind::SearchCap,
                    "some graphs exceeded the search cap",
                ));
            }
        }
        Command::Product { spec, m } => {
            let g = load(&spec, err)?;
            if m == 0 {
                return Err(Failure::new(FailureKind::Usage, "m must be at least 1"));
            }
            writeln!(out, "{}", to_graph6(&lex_product(&g, &complete_graph(m)?)?))?;
        }
        Command::VerifyPaper { criteria } => {
            let claims = if criteria.is_empty() {
                run_all(limits)
            } else {
                criteria
                    .iter()
                    .flat_map(|&id| run_criterion(id, limits))
                    .collect()
            };
            write!(out, "{}", render(&claims))?;
            if claims.is_empty() {
                return Err(Failure::new(FailureKind::Usage, "no such criterion"));
            }
            if claims.iter().any(|c| !c.passed()) {
                return Err(Failure::new(FailureKind::ClaimFailed, "some claims failed"));
            }
        }
    }
    Ok(())
}

/// Entry point of the `ekr` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    match run(cli, &mut out, &mut err) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            let _ = writeln!(err, "error: {}", f.message);
            ExitCode::from(f.kind.code())
        }
    }
}
