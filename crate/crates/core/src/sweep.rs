//! Checks graph6 streams against the conjecture that every graph is r-EKR
//! for `1 ≤ r ≤ μ/2`, and strictly so for `2 < r < μ/2`.
//!
//! Graphs are processed in parallel; records come back in input order.

use std::io::{self, BufRead, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::ekr::{ekr_status, EkrError, SearchLimits};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::indep::{independence_number, minimax_independence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelVerdict {
    pub r: usize,
    pub is_ekr: bool,
    pub is_strictly_ekr: bool,
    pub max_star: u64,
    pub max_intersecting: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    /// One entry per `r = 1, …, ⌊μ/2⌋`.
    pub levels: Vec<LevelVerdict>,
    /// Some `r ≤ μ/2` is not r-EKR.
    pub counterexample: bool,
    /// Some `2 < r < μ/2` is r-EKR but not strictly.
    pub strict_violation: bool,
}

impl SweepRecord {
    pub fn compute(g: &Graph, limits: SearchLimits) -> Result<Self, EkrError> {
        let mu = minimax_independence(g);
        let levels = (1..=mu / 2)
            .map(|r| {
                ekr_status(g, r, limits).map(|rep| LevelVerdict {
                    r,
                    is_ekr: rep.is_ekr,
                    is_strictly_ekr: rep.is_strictly_ekr,
                    max_star: rep.max_star,
                    max_intersecting: rep.max_intersecting,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SweepRecord {
            graph6: to_graph6(g),
            n: g.order(),
            alpha: independence_number(g),
            mu,
            counterexample: levels.iter().any(|l| !l.is_ekr),
            strict_violation: levels
                .iter()
                .any(|l| l.r > 2 && 2 * l.r < mu && !l.is_strictly_ekr),
            levels,
        })
    }
}

/// Flat CSV row; per-r columns are `;`-separated lists over `r = 1, …`.
#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    n: usize,
    alpha: usize,
    mu: usize,
    ekr: String,
    strict: String,
    max_star: String,
    max_intersecting: String,
    counterexample: bool,
    strict_violation: bool,
}

fn joined<T: ToString>(levels: &[LevelVerdict], f: impl Fn(&LevelVerdict) -> T) -> String {
    levels
        .iter()
        .map(|l| f(l).to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// A line that could not be swept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    /// 1-based line number in the input.
    pub line: usize,
    pub message: String,
    /// The failure was the search cap rather than a malformed line.
    pub search_cap: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub errors: Vec<LineError>,
    /// Graphs above the order bound, left out.
    pub skipped: usize,
}

impl SweepOutcome {
    pub fn counterexamples(&self) -> usize {
        self.records.iter().filter(|r| r.counterexample).count()
    }

    pub fn strict_violations(&self) -> usize {
        self.records.iter().filter(|r| r.strict_violation).count()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} graphs, {} skipped, {} counterexamples, {} strictness violations, {} malformed lines, {} over the search cap",
            self.records.len(),
            self.skipped,
            self.counterexamples(),
            self.strict_violations(),
            self.errors.iter().filter(|e| !e.search_cap).count(),
            self.errors.iter().filter(|e| e.search_cap).count(),
        )
    }

    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for rec in &self.records {
            w.serialize(CsvRow {
                graph6: &rec.graph6,
                n: rec.n,
                alpha: rec.alpha,
                mu: rec.mu,
                ekr: joined(&rec.levels, |l| l.is_ekr as u8),
                strict: joined(&rec.levels, |l| l.is_strictly_ekr as u8),
                max_star: joined(&rec.levels, |l| l.max_star),
                max_intersecting: joined(&rec.levels, |l| l.max_intersecting),
                counterexample: rec.counterexample,
                strict_violation: rec.strict_violation,
            })?;
        }
        if self.records.is_empty() {
            w.write_record([
                "graph6",
                "n",
                "alpha",
                "mu",
                "ekr",
                "strict",
                "max_star",
                "max_intersecting",
                "counterexample",
                "strict_violation",
            ])?;
        }
        w.flush()
    }
}

/// Sweeps graph6 lines, leaving out graphs of order above `max_n`. Blank
/// lines and the `>>graph6<<` header alone are ignored; bad lines are
/// reported and the sweep goes on.
pub fn sweep_lines(lines: &[String], limits: SearchLimits, max_n: Option<usize>) -> SweepOutcome {
    let results: Vec<Option<Result<Option<SweepRecord>, LineError>>> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| {
            let line = line.trim();
            if line.is_empty() || line == ">>graph6<<" {
                return None;
            }
            let fail = |message: String, search_cap| LineError {
                line: i + 1,
                message,
                search_cap,
            };
            Some(
                from_graph6(line)
                    .map_err(|e| fail(e.to_string(), false))
                    .and_then(|g| {
                        if max_n.is_some_and(|max| g.order() > max) {
                            return Ok(None);
                        }
                        SweepRecord::compute(&g, limits)
                            .map(Some)
                            .map_err(|e| fail(e.to_string(), true))
                    }),
            )
        })
        .collect();
    let mut outcome = SweepOutcome::default();
    for r in results.into_iter().flatten() {
        match r {
            Ok(Some(rec)) => outcome.records.push(rec),
            Ok(None) => outcome.skipped += 1,
            Err(e) => outcome.errors.push(e),
        }
    }
    outcome
}

pub fn sweep_reader<R: BufRead>(
    input: R,
    limits: SearchLimits,
    max_n: Option<usize>,
) -> io::Result<SweepOutcome> {
    let lines = input.lines().collect::<io::Result<Vec<_>>>()?;
    Ok(sweep_lines(&lines, limits, max_n))
}

/// Sweeps a list of graphs (for instance a census level).
pub fn sweep_graphs(graphs: &[Graph], limits: SearchLimits) -> SweepOutcome {
    let lines: Vec<String> = graphs.iter().map(to_graph6).collect();
    sweep_lines(&lines, limits, None)
}
