//! JSON and plain-text renderings of graph summaries and EKR reports.
//!
//! Vertex sets are written as sorted integer arrays. Witness families longer
//! than [`WITNESS_LIMIT`] are replaced by their size.

use std::fmt::Write as _;

use serde::Serialize;

use crate::ekr::{graph_id, EkrReport};
use crate::graph::Graph;
use crate::indep::{
    count_independent_r_sets, independence_number, max_star, minimax_independence, SetFamily,
};

/// Largest witness family written out in full.
pub const WITNESS_LIMIT: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sizes {
    pub family: u64,
    pub max_star: u64,
    pub max_intersecting: usize,
    pub max_anomalous: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ekr: bool,
    pub strict: bool,
}

/// A witness family, or its size when elided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Members(Vec<Vec<usize>>),
    Elided { elided: usize },
}

impl Witness {
    pub fn of(f: &SetFamily) -> Self {
        if f.len() > WITNESS_LIMIT {
            Witness::Elided { elided: f.len() }
        } else {
            Witness::Members(f.to_lists())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub intersecting: Witness,
    pub anomalous: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EkrJson {
    pub graph: String,
    pub r: usize,
    pub sizes: Sizes,
    pub verdict: Verdict,
    pub centres: Vec<usize>,
    pub witnesses: Witnesses,
}

impl From<&EkrReport> for EkrJson {
    fn from(rep: &EkrReport) -> Self {
        EkrJson {
            graph: rep.graph.clone(),
            r: rep.r,
            sizes: Sizes {
                family: rep.family_size,
                max_star: rep.max_star,
                max_intersecting: rep.max_intersecting,
                max_anomalous: rep.max_anomalous,
            },
            verdict: Verdict {
                ekr: rep.is_ekr,
                strict: rep.is_strictly_ekr,
            },
            centres: rep.centres.clone(),
            witnesses: Witnesses {
                intersecting: Witness::of(&rep.witness_intersecting),
                anomalous: rep.witness_anomalous.as_ref().map(Witness::of),
            },
        }
    }
}

pub fn ekr_json(rep: &EkrReport) -> String {
    serde_json::to_string_pretty(&EkrJson::from(rep)).expect("plain data serializes")
}

fn family_text(f: &SetFamily) -> String {
    if f.len() > WITNESS_LIMIT {
        return format!("({} members, elided)", f.len());
    }
    let sets: Vec<String> = f.iter().map(|s| format!("{s:?}")).collect();
    sets.join(" ")
}

pub fn ekr_text(rep: &EkrReport) -> String {
    let mut out = String::new();
    let anomalous = rep
        .max_anomalous
        .map_or_else(|| "none".to_string(), |a| a.to_string());
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "graph             {}", rep.graph).unwrap();
    writeln!(out, "r                 {}", rep.r).unwrap();
    writeln!(out, "|I^(r)|           {}", rep.family_size).unwrap();
    writeln!(out, "max star          {}", rep.max_star).unwrap();
    writeln!(out, "max intersecting  {}", rep.max_intersecting).unwrap();
    writeln!(out, "max anomalous     {anomalous}").unwrap();
    writeln!(out, "r-EKR             {}", yes_no(rep.is_ekr)).unwrap();
    writeln!(out, "strictly r-EKR    {}", yes_no(rep.is_strictly_ekr)).unwrap();
    writeln!(out, "centres           {:?}", rep.centres).unwrap();
    writeln!(
        out,
        "intersecting      {}",
        family_text(&rep.witness_intersecting)
    )
    .unwrap();
    if let Some(w) = &rep.witness_anomalous {
        writeln!(out, "anomalous         {}", family_text(w)).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelRow {
    pub r: usize,
    pub family: u64,
    pub max_star: u64,
}

/// Order, size, α, μ and the star table for `1 ≤ r ≤ α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub alpha: usize,
    pub mu: usize,
    pub levels: Vec<LevelRow>,
}

impl GraphSummary {
    pub fn compute(g: &Graph) -> Self {
        let alpha = independence_number(g);
        let levels = (1..=alpha)
            .map(|r| LevelRow {
                r,
                family: count_independent_r_sets(g, r),
                max_star: max_star(g, r).0,
            })
            .collect();
        GraphSummary {
            graph: graph_id(g),
            n: g.order(),
            edges: g.edge_count(),
            alpha,
            mu: minimax_independence(g),
            levels,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph  {}", self.graph).unwrap();
        writeln!(out, "n      {}", self.n).unwrap();
        writeln!(out, "edges  {}", self.edges).unwrap();
        writeln!(out, "alpha  {}", self.alpha).unwrap();
        writeln!(out, "mu     {}", self.mu).unwrap();
        writeln!(out, "{:>4} {:>12} {:>10}", "r", "|I^(r)|", "max star").unwrap();
        for row in &self.levels {
            writeln!(out, "{:>4} {:>12} {:>10}", row.r, row.family, row.max_star).unwrap();
        }
        out
    }
}
