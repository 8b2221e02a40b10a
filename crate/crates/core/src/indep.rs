//! Independent r-sets, stars, and the invariants α (independence number) and
//! μ (minimum size of a maximal independent set).

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("member {0:?} is not an independent set of the ground graph")]
    NotIndependent(VertexSet),
    #[error("member {0:?} has vertices outside the ground graph")]
    OutOfRange(VertexSet),
}

/// An ordered, duplicate-free family of vertex sets.
///
/// Families built with [`SetFamily::independent_in`] or by the enumeration
/// functions of this module consist of independent sets of a graph; abstract
/// families (faces of a solid, covering blocks) use [`SetFamily::new`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SetFamily {
    members: Vec<VertexSet>,
    uniform_size: Option<usize>,
}

impl SetFamily {
    /// Collects `members`, dropping repeats (first occurrence wins).
    pub fn new(members: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut seen = HashSet::new();
        let members: Vec<VertexSet> = members.into_iter().filter(|m| seen.insert(*m)).collect();
        let uniform_size = match members.first() {
            Some(first) if members.iter().all(|m| m.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        SetFamily {
            members,
            uniform_size,
        }
    }

    /// Like [`SetFamily::new`] but checks that every member is an independent set of `g`.
    pub fn independent_in(
        g: &Graph,
        members: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self, FamilyError> {
        let family = SetFamily::new(members);
        for &m in &family.members {
            if !m.is_subset(g.vertices()) {
                return Err(FamilyError::OutOfRange(m));
            }
            if !g.is_independent(m) {
                return Err(FamilyError::NotIndependent(m));
            }
        }
        Ok(family)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    /// Common member size, when every member has the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        self.uniform_size
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.members.contains(&set)
    }

    /// `F_x`: members containing `x`.
    pub fn containing(&self, x: usize) -> SetFamily {
        SetFamily::new(self.members.iter().copied().filter(|m| m.contains(x)))
    }

    /// Union of all members.
    pub fn support(&self) -> VertexSet {
        self.members
            .iter()
            .fold(VertexSet::EMPTY, |acc, &m| acc.union(m))
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        let other: HashSet<_> = other.members.iter().collect();
        self.members.iter().all(|m| other.contains(m))
    }

    /// Sorted vertex lists, for reports.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|m| m.to_vec()).collect()
    }
}

impl FromIterator<VertexSet> for SetFamily {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        SetFamily::new(iter)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Invariants of a graph together with the per-vertex star sizes for one `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSummary {
    pub alpha: usize,
    pub mu: usize,
    pub r: usize,
    pub star_sizes: Vec<u64>,
}

impl InvariantSummary {
    pub fn compute(g: &Graph, r: usize) -> Self {
        InvariantSummary {
            alpha: independence_number(g),
            mu: minimax_independence(g),
            r,
            star_sizes: (0..g.order()).map(|v| star_size(g, v, r)).collect(),
        }
    }
}

fn closed_neighbourhood(g: &Graph, v: usize) -> VertexSet {
    g.neighbours(v).union(VertexSet::singleton(v))
}

/// Visits the independent `k`-subsets of `allowed` in lexicographic order,
/// each already united with `base`.
fn visit_independent(
    g: &Graph,
    base: VertexSet,
    allowed: VertexSet,
    k: usize,
    visit: &mut impl FnMut(VertexSet),
) {
    if k == 0 {
        visit(base);
        return;
    }
    let mut rest = allowed;
    while rest.len() >= k {
        let v = rest.first().expect("nonempty");
        rest.remove(v);
        let next = base.union(VertexSet::singleton(v));
        visit_independent(g, next, rest.difference(g.neighbours(v)), k - 1, visit);
    }
}

/// Number of independent `k`-subsets of `allowed`.
pub fn count_independent(g: &Graph, allowed: VertexSet, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if allowed.len() < k {
        return 0;
    }
    if k == 1 {
        return allowed.len() as u64;
    }
    let v = allowed.first().expect("nonempty");
    let without = allowed.difference(VertexSet::singleton(v));
    count_independent(g, without.difference(g.neighbours(v)), k - 1)
        + count_independent(g, without, k)
}

/// `I^(r)(G)` in lexicographic order of sorted vertex lists. `r = 0` gives `{∅}`.
pub fn independent_r_sets(g: &Graph, r: usize) -> SetFamily {
    let mut members = Vec::new();
    visit_independent(g, VertexSet::EMPTY, g.vertices(), r, &mut |s| {
        members.push(s)
    });
    SetFamily {
        uniform_size: Some(r),
        members,
    }
}

/// `|I^(r)(G)|` without materializing the family.
pub fn count_independent_r_sets(g: &Graph, r: usize) -> u64 {
    count_independent(g, g.vertices(), r)
}

/// The star `I_v^(r)(G)`.
pub fn star(g: &Graph, v: usize, r: usize) -> SetFamily {
    let mut members = Vec::new();
    if r >= 1 {
        let allowed = g.vertices().difference(closed_neighbourhood(g, v));
        let mut sets = Vec::new();
        visit_independent(g, VertexSet::singleton(v), allowed, r - 1, &mut |s| {
            sets.push(s)
        });
        members = sets;
        members.sort_by_key(|s| s.to_vec());
    }
    SetFamily {
        uniform_size: Some(r),
        members,
    }
}

/// `|I_v^(r)(G)|`.
pub fn star_size(g: &Graph, v: usize, r: usize) -> u64 {
    if r == 0 {
        return 0;
    }
    count_independent(
        g,
        g.vertices().difference(closed_neighbourhood(g, v)),
        r - 1,
    )
}

/// Largest star size and every vertex attaining it, in increasing order.
pub fn max_star(g: &Graph, r: usize) -> (u64, Vec<usize>) {
    let sizes: Vec<u64> = (0..g.order()).map(|v| star_size(g, v, r)).collect();
    let best = sizes.iter().copied().max().unwrap_or(0);
    let centres = (0..g.order()).filter(|&v| sizes[v] == best).collect();
    (best, centres)
}

/// A maximum independent set (lexicographically first among those the search meets).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    mis_search(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// Greedy colouring bound: covers `cand` by cliques of `g`; each clique holds
/// at most one vertex of an independent set.
fn clique_cover_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut left = cand;
    let mut cliques = 0;
    while let Some(v) = left.first() {
        let mut pool = left.intersection(g.neighbours(v));
        left.remove(v);
        while let Some(u) = pool.first() {
            pool = pool.intersection(g.neighbours(u));
            left.remove(u);
        }
        cliques += 1;
    }
    cliques
}

fn mis_search(g: &Graph, chosen: VertexSet, cand: VertexSet, best: &mut VertexSet) {
    if cand.is_empty() {
        if chosen.len() > best.len() {
            *best = chosen;
        }
        return;
    }
    if chosen.len() + clique_cover_bound(g, cand) <= best.len() {
        return;
    }
    // Branch on a vertex of minimum degree inside the candidate set.
    let v = cand
        .iter()
        .min_by_key(|&v| g.neighbours(v).intersection(cand).len())
        .expect("nonempty");
    let with = cand.difference(closed_neighbourhood(g, v));
    mis_search(g, chosen.union(VertexSet::singleton(v)), with, best);
    if g.neighbours(v).meets(cand) {
        mis_search(g, chosen, cand.difference(VertexSet::singleton(v)), best);
    }
}

/// α(G), exact.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximal independent set of minimum size (an independent dominating set
/// of minimum size), found by Bron–Kerbosch with pivoting on the complement.
pub fn minimum_maximal_independent_set(g: &Graph) -> VertexSet {
    let mut best = g.vertices();
    let mut found = g.order() == 0;
    bron_kerbosch_min(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut best,
        &mut found,
    );
    if !found {
        best = VertexSet::EMPTY;
    }
    best
}

/// μ(G), exact.
pub fn minimax_independence(g: &Graph) -> usize {
    minimum_maximal_independent_set(g).len()
}

fn bron_kerbosch_min(
    g: &Graph,
    chosen: VertexSet,
    cand: VertexSet,
    excluded: VertexSet,
    best: &mut VertexSet,
    found: &mut bool,
) {
    if cand.is_empty() {
        if excluded.is_empty() && (!*found || chosen.len() < best.len()) {
            *best = chosen;
            *found = true;
        }
        return;
    }
    if *found && chosen.len() + 1 >= best.len() {
        return;
    }
    // Non-neighbours of u (other than u) play the role of complement neighbours.
    let compat = |u: usize| g.vertices().difference(closed_neighbourhood(g, u));
    let pivot = cand
        .union(excluded)
        .iter()
        .max_by_key(|&u| (cand.intersection(compat(u)).len(), std::cmp::Reverse(u)))
        .expect("nonempty");
    let mut cand = cand;
    let mut excluded = excluded;
    for v in cand.difference(compat(pivot)).iter() {
        let nv = compat(v);
        bron_kerbosch_min(
            g,
            chosen.union(VertexSet::singleton(v)),
            cand.intersection(nv),
            excluded.intersection(nv),
            best,
            found,
        );
        cand.remove(v);
        excluded.insert(v);
    }
}
