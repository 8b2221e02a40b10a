//! Maximum intersecting subfamilies and the r-EKR decision.
//!
//! `G` is *r-EKR* when no intersecting subfamily of `I^(r)(G)` is larger
//! than the largest star `I_v^(r)(G)`, and *strictly* r-EKR when moreover
//! every intersecting subfamily of maximum size is a star. An intersecting
//! family contained in no star (empty common intersection) is *anomalous*;
//! strictness fails exactly when an anomalous family reaches the maximum.
//!
//! Sizes are exact. Families above the search cap are refused with
//! [`EkrError::SearchCap`] instead of being approximated.

use thiserror::Error;

use crate::clique::{self, Clique};
use crate::graph::{Graph, VertexSet, MAX_ORDER};
use crate::graph6::to_graph6;
use crate::indep::{count_independent_r_sets, independent_r_sets, max_star, star_size, SetFamily};

/// Default cap on `|I^(r)(G)|` for the exact searches.
pub const DEFAULT_MAX_FAMILY: usize = 50_000;

/// Environment variable overriding [`DEFAULT_MAX_FAMILY`].
pub const MAX_FAMILY_ENV: &str = "EKR_MAX_FAMILY";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EkrError {
    #[error("r must be at least 1")]
    ZeroR,
    #[error("|I^(r)| = {size} exceeds the search cap {cap} (set {MAX_FAMILY_ENV} to raise it)")]
    SearchCap { size: u64, cap: usize },
    #[error("{MAX_FAMILY_ENV}={0:?} is not a positive integer")]
    BadCap(String),
    #[error("the empty family has no common intersection")]
    EmptyFamily,
    #[error("family of {size} members exceeds the order limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the 2-EKR formula needs a non-complete graph")]
    CompleteGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest family the exact searches accept.
    pub max_family: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_family: DEFAULT_MAX_FAMILY,
        }
    }
}

impl SearchLimits {
    /// Default limits, with the cap taken from `EKR_MAX_FAMILY` when set.
    pub fn from_env() -> Result<Self, EkrError> {
        match std::env::var(MAX_FAMILY_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(cap) if cap > 0 => Ok(SearchLimits { max_family: cap }),
                _ => Err(EkrError::BadCap(v)),
            },
            Err(_) => Ok(SearchLimits::default()),
        }
    }

    fn check(&self, size: u64) -> Result<(), EkrError> {
        if size > self.max_family as u64 {
            return Err(EkrError::SearchCap {
                size,
                cap: self.max_family,
            });
        }
        Ok(())
    }
}

/// An extremal subfamily together with its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub size: usize,
    pub witness: SetFamily,
}

pub fn is_intersecting(f: &SetFamily) -> bool {
    let m = f.members();
    m.iter()
        .enumerate()
        .all(|(i, a)| m[i + 1..].iter().all(|b| a.meets(*b)))
}

/// `∩F`. The family lies in a star exactly when this is nonempty.
pub fn common_intersection(f: &SetFamily) -> Result<VertexSet, EkrError> {
    let mut it = f.iter();
    let first = *it.next().ok_or(EkrError::EmptyFamily)?;
    Ok(it.fold(first, |acc, s| acc.intersection(*s)))
}

/// One vertex per member, adjacent when the members are disjoint.
pub fn disjointness_graph(f: &SetFamily) -> Result<Graph, EkrError> {
    let m = f.members();
    if m.len() > MAX_ORDER {
        return Err(EkrError::TooLarge {
            size: m.len(),
            limit: MAX_ORDER,
        });
    }
    let mut edges = Vec::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            if !m[i].meets(m[j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(m.len(), &edges).expect("indices are in range"))
}

fn witness(f: &SetFamily, c: &Clique) -> SetFamily {
    let w = SetFamily::new(c.members.iter().map(|&i| f.members()[i]));
    assert!(
        is_intersecting(&w),
        "search returned a non-intersecting witness"
    );
    w
}

/// Indices of the largest `F_x` (first such `x`).
fn largest_star_seed(f: &SetFamily) -> Vec<usize> {
    let m = f.members();
    let mut best: Vec<usize> = Vec::new();
    for x in f.support().iter() {
        if m.iter().filter(|s| s.contains(x)).count() > best.len() {
            best = (0..m.len()).filter(|&i| m[i].contains(x)).collect();
        }
    }
    best
}

/// A good anomalous family to start from: `{A ∈ F_x : A ∩ B ≠ ∅} ∪ {B}`
/// for the largest star `F_x` and the best `B` avoiding `x`, greedily
/// extended. Only tried on moderate families since it is quadratic.
fn anomalous_seed(f: &SetFamily) -> Option<Vec<usize>> {
    let m = f.members();
    if m.len() > 5_000 {
        return None;
    }
    let star = largest_star_seed(f);
    let x = m[*star.first()?]
        .iter()
        .find(|&x| star.iter().all(|&i| m[i].contains(x)))?;
    let mut best: Option<Vec<usize>> = None;
    for (b, &set) in m.iter().enumerate() {
        if set.contains(x) {
            continue;
        }
        let count = star.iter().filter(|&&i| m[i].meets(set)).count() + 1;
        if best.as_ref().is_some_and(|s| s.len() >= count) {
            continue;
        }
        let mut fam: Vec<usize> = star.iter().copied().filter(|&i| m[i].meets(set)).collect();
        fam.push(b);
        let common = fam
            .iter()
            .fold(VertexSet::full(MAX_ORDER), |acc, &i| acc.intersection(m[i]));
        if common.is_empty() {
            best = Some(fam);
        }
    }
    let mut fam = best?;
    for i in 0..m.len() {
        if !fam.contains(&i) && fam.iter().all(|&j| m[j].meets(m[i])) {
            fam.push(i);
        }
    }
    Some(fam)
}

/// Largest intersecting subfamily of an arbitrary family.
pub fn max_intersecting_subfamily(
    f: &SetFamily,
    limits: SearchLimits,
) -> Result<Extremal, EkrError> {
    limits.check(f.len() as u64)?;
    let seed = largest_star_seed(f);
    let (c, _) = clique::max_intersecting(f.members(), Some(&seed));
    Ok(Extremal {
        size: c.size,
        witness: witness(f, &c),
    })
}

/// Largest anomalous subfamily of an arbitrary family, `None` when every
/// intersecting subfamily lies in a star.
pub fn max_anomalous_subfamily(
    f: &SetFamily,
    limits: SearchLimits,
) -> Result<Option<Extremal>, EkrError> {
    limits.check(f.len() as u64)?;
    let seed = anomalous_seed(f);
    let (c, _) = clique::max_anomalous(f.members(), seed.as_deref());
    Ok(c.map(|c| {
        let w = witness(f, &c);
        debug_assert!(common_intersection(&w).is_ok_and(|s| s.is_empty()));
        Extremal {
            size: c.size,
            witness: w,
        }
    }))
}

fn family(g: &Graph, r: usize, limits: SearchLimits) -> Result<SetFamily, EkrError> {
    if r == 0 {
        return Err(EkrError::ZeroR);
    }
    limits.check(count_independent_r_sets(g, r))?;
    Ok(independent_r_sets(g, r))
}

/// Largest intersecting subfamily of `I^(r)(G)`.
pub fn max_intersecting(g: &Graph, r: usize, limits: SearchLimits) -> Result<Extremal, EkrError> {
    max_intersecting_subfamily(&family(g, r, limits)?, limits)
}

/// Largest anomalous subfamily of `I^(r)(G)`.
pub fn max_anomalous(
    g: &Graph,
    r: usize,
    limits: SearchLimits,
) -> Result<Option<Extremal>, EkrError> {
    max_anomalous_subfamily(&family(g, r, limits)?, limits)
}

/// Full verdict for one `(G, r)`.
///
/// For `r > α(G)` the family is empty and the report is vacuous: all sizes
/// zero, no centres, and both verdicts true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkrReport {
    /// Graph label, or its graph6 encoding when unlabelled.
    pub graph: String,
    pub r: usize,
    pub family_size: u64,
    pub max_star: u64,
    /// Every vertex attaining `max_star`.
    pub centres: Vec<usize>,
    pub max_intersecting: usize,
    pub max_anomalous: Option<usize>,
    pub is_ekr: bool,
    pub is_strictly_ekr: bool,
    pub witness_intersecting: SetFamily,
    pub witness_anomalous: Option<SetFamily>,
}

pub fn graph_id(g: &Graph) -> String {
    g.label().map_or_else(|| to_graph6(g), str::to_owned)
}

pub fn ekr_status(g: &Graph, r: usize, limits: SearchLimits) -> Result<EkrReport, EkrError> {
    let f = family(g, r, limits)?;
    let (max_star, centres) = if f.is_empty() {
        (0, Vec::new())
    } else {
        max_star(g, r)
    };
    let int = max_intersecting_subfamily(&f, limits)?;
    let anom = max_anomalous_subfamily(&f, limits)?;
    debug_assert!(int.size as u64 >= max_star);
    let is_ekr = int.size as u64 == max_star;
    let is_strictly_ekr = is_ekr && anom.as_ref().is_none_or(|a| a.size < int.size);
    Ok(EkrReport {
        graph: graph_id(g),
        r,
        family_size: f.len() as u64,
        max_star,
        centres,
        max_intersecting: int.size,
        max_anomalous: anom.as_ref().map(|a| a.size),
        is_ekr,
        is_strictly_ekr,
        witness_intersecting: int.witness,
        witness_anomalous: anom.map(|a| a.witness),
    })
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), EkrError> {
    if v >= g.order() {
        return Err(EkrError::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    Ok(())
}

/// `|I_v^(r)| ≥ |A|` for every intersecting subfamily `A`.
pub fn is_r_centre(g: &Graph, v: usize, r: usize, limits: SearchLimits) -> Result<bool, EkrError> {
    check_vertex(g, v)?;
    let best = max_intersecting(g, r, limits)?;
    Ok(star_size(g, v, r) >= best.size as u64)
}

/// `|I_v^(r)| > |A|` for every anomalous subfamily `A`.
pub fn is_strict_r_centre(
    g: &Graph,
    v: usize,
    r: usize,
    limits: SearchLimits,
) -> Result<bool, EkrError> {
    check_vertex(g, v)?;
    let best = max_anomalous(g, r, limits)?;
    Ok(best.is_none_or(|a| star_size(g, v, r) > a.size as u64))
}

/// The 2-EKR verdict read off `α` and the minimum degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEkrClass {
    pub alpha: usize,
    pub min_degree: usize,
    pub is_ekr: bool,
    pub is_strictly_ekr: bool,
    /// The 2-centres (minimum-degree vertices); empty when not 2-EKR.
    pub centres: Vec<usize>,
}

/// Classifies a non-complete graph for `r = 2` without any search.
///
/// Anomalous families of 2-sets are exactly the three pairs inside an
/// independent triple, and `|I_v^(2)| = n − 1 − d(v)`. So with `α = 2` the
/// graph is strictly 2-EKR; otherwise it is 2-EKR iff `δ ≤ n − 4` and
/// strictly so iff `δ ≤ n − 5`.
pub fn check_2ekr_formula(g: &Graph) -> Result<TwoEkrClass, EkrError> {
    if g.is_complete() {
        return Err(EkrError::CompleteGraph);
    }
    let n = g.order();
    let alpha = crate::indep::independence_number(g);
    let delta = g.min_degree();
    let (is_ekr, is_strictly_ekr) = if alpha == 2 {
        (true, true)
    } else {
        (delta + 4 <= n, delta + 5 <= n)
    };
    let centres = if is_ekr {
        (0..n).filter(|&v| g.degree(v) == delta).collect()
    } else {
        Vec::new()
    };
    Ok(TwoEkrClass {
        alpha,
        min_degree: delta,
        is_ekr,
        is_strictly_ekr,
        centres,
    })
}
