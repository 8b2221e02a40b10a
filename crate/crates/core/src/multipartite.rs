//! Disjoint unions of two complete multipartite graphs and their
//! compression operators.
//!
//! `G = G_1 ⊔ G_2` with `G_1 = K_a[b_1, …, b_a]` and `G_2 = K_c[d_1, …, d_c]`,
//! both with non-increasing part sizes. Parts and positions inside a part are
//! numbered from 1: `v(i, j)` is the `j`-th vertex of the part `V_i` of `G_1`
//! and `w(i, j)` that of `W_i` in `G_2`. Vertex indices follow
//! [`disjoint_union`] of [`complete_multipartite`], so `G_1` comes first.
//!
//! `φ_i` moves `V_i` onto the first `b_i` vertices of `V_1` and `θ_i` does the
//! same for `W_i`. The compression `Φ_i` replaces each member `A` by `φ_i(A)`
//! unless that image is already present; `Θ_i` likewise. A family is
//! *standardized* when `V_1` meets every member, and *compressed* when every
//! compression fixes it.

use num_integer::binomial;
use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::ekr::is_intersecting;
use crate::graph::{complete_multipartite, disjoint_union, Graph, GraphError, VertexSet};
use crate::indep::{independent_r_sets, max_star, star, SetFamily};
use crate::named::parse_multipartite_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `G_1`, parts `V_i`.
    First,
    /// `G_2`, parts `W_i`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultipartiteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no part {index} on side {side:?} (valid: 2..={max})")]
    PartIndex {
        side: Side,
        index: usize,
        max: usize,
    },
    #[error("{0:?} is not an independent set of the union")]
    NotIndependent(VertexSet),
    #[error("the family is empty")]
    EmptyFamily,
    #[error("the family is not intersecting")]
    NotIntersecting,
    #[error("V_1 misses some member, so the family is not standardized")]
    NotStandardized,
    #[error("members have different sizes")]
    NotUniform,
    #[error("all parts of each side must have equal size")]
    UnequalParts,
    #[error("r = {r} is outside μ/2 < r < μ for μ = {mu}")]
    ROutOfRange { r: usize, mu: usize },
    #[error("vertex {0} is not in V_1")]
    NotInFirstPart(usize),
}

/// The structured union, with its realized graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteUnion {
    b: Vec<usize>,
    d: Vec<usize>,
    graph: Graph,
}

impl MultipartiteUnion {
    pub fn new(b: &[usize], d: &[usize]) -> Result<Self, MultipartiteError> {
        let graph = disjoint_union(&complete_multipartite(b)?, &complete_multipartite(d)?)?;
        let label = format!("{}+{}", join(b), join(d));
        Ok(MultipartiteUnion {
            b: b.to_vec(),
            d: d.to_vec(),
            graph: graph.with_label(label),
        })
    }

    /// Parses `b1,b2+d1,d2`; part sizes are sorted into non-increasing order.
    pub fn from_spec(spec: &str) -> Result<Self, MultipartiteError> {
        let (b, d, _) = parse_multipartite_spec(spec)?;
        Self::new(&b, &d)
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn sizes(&self, side: Side) -> &[usize] {
        match side {
            Side::First => &self.b,
            Side::Second => &self.d,
        }
    }

    fn first_index(&self, side: Side, i: usize) -> usize {
        let base = match side {
            Side::First => 0,
            Side::Second => self.b.iter().sum(),
        };
        base + self.sizes(side)[..i - 1].iter().sum::<usize>()
    }

    /// Index of `v(i, j)`; both arguments start at 1.
    pub fn v(&self, i: usize, j: usize) -> usize {
        assert!((1..=self.b.len()).contains(&i) && (1..=self.b[i - 1]).contains(&j));
        self.first_index(Side::First, i) + j - 1
    }

    /// Index of `w(i, j)`; both arguments start at 1.
    pub fn w(&self, i: usize, j: usize) -> usize {
        assert!((1..=self.d.len()).contains(&i) && (1..=self.d[i - 1]).contains(&j));
        self.first_index(Side::Second, i) + j - 1
    }

    /// `V_i` or `W_i`.
    pub fn part(&self, side: Side, i: usize) -> VertexSet {
        let start = self.first_index(side, i);
        VertexSet::full(start + self.sizes(side)[i - 1]).difference(VertexSet::full(start))
    }

    /// `(side, i, j)` for a vertex index.
    pub fn label(&self, vertex: usize) -> (Side, usize, usize) {
        for side in [Side::First, Side::Second] {
            for i in 1..=self.sizes(side).len() {
                let start = self.first_index(side, i);
                if (start..start + self.sizes(side)[i - 1]).contains(&vertex) {
                    return (side, i, vertex - start + 1);
                }
            }
        }
        panic!("vertex {vertex} out of range");
    }

    /// `μ(G) = b_a + d_c`.
    pub fn mu_formula(&self) -> usize {
        self.b[self.b.len() - 1] + self.d[self.d.len() - 1]
    }

    /// The same graph with `G_1` and `G_2` exchanged.
    pub fn swapped(&self) -> MultipartiteUnion {
        Self::new(&self.d, &self.b).expect("swapping keeps a valid structure")
    }

    /// Carries a vertex set into the numbering of [`Self::swapped`].
    pub fn swap_set(&self, set: VertexSet) -> VertexSet {
        let n1: usize = self.b.iter().sum();
        let n2: usize = self.d.iter().sum();
        let low = set.bits() & ((1u128 << n1) - 1);
        let high = set.bits() >> n1;
        VertexSet::from_bits(high | low << n2)
    }

    fn check_part(&self, side: Side, i: usize) -> Result<(), MultipartiteError> {
        let max = self.sizes(side).len();
        if !(2..=max).contains(&i) {
            return Err(MultipartiteError::PartIndex {
                side,
                index: i,
                max,
            });
        }
        Ok(())
    }

    /// `φ_i` (side `First`) or `θ_i` (side `Second`) applied to `set`.
    pub fn map(
        &self,
        side: Side,
        i: usize,
        set: VertexSet,
    ) -> Result<VertexSet, MultipartiteError> {
        self.check_part(side, i)?;
        if !self.graph.is_independent(set) {
            return Err(MultipartiteError::NotIndependent(set));
        }
        let part = self.part(side, i);
        let moved = set.intersection(part);
        let shift = self.first_index(side, i) - self.first_index(side, 1);
        Ok(set
            .difference(part)
            .union(VertexSet::from_bits(moved.bits() >> shift)))
    }

    pub fn phi(&self, i: usize, set: VertexSet) -> Result<VertexSet, MultipartiteError> {
        self.map(Side::First, i, set)
    }

    pub fn theta(&self, i: usize, set: VertexSet) -> Result<VertexSet, MultipartiteError> {
        self.map(Side::Second, i, set)
    }

    /// `Φ_i` or `Θ_i`: members are replaced in place by their images when
    /// the image is not already a member.
    pub fn compress(
        &self,
        side: Side,
        i: usize,
        f: &SetFamily,
    ) -> Result<SetFamily, MultipartiteError> {
        let images = f
            .iter()
            .map(|&a| self.map(side, i, a))
            .collect::<Result<Vec<_>, _>>()?;
        let out: Vec<VertexSet> = f
            .iter()
            .zip(&images)
            .map(|(&a, &img)| if f.contains(img) { a } else { img })
            .collect();
        Ok(SetFamily::new(out))
    }

    /// Whether every `Φ_i` and `Θ_i` fixes `f`.
    pub fn is_compressed(&self, f: &SetFamily) -> Result<bool, MultipartiteError> {
        for side in [Side::First, Side::Second] {
            for i in 2..=self.sizes(side).len() {
                let g = self.compress(side, i, f)?;
                if g.len() != f.len() || !g.is_subfamily_of(f) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_standardized(&self, f: &SetFamily) -> bool {
        let v1 = self.part(Side::First, 1);
        f.iter().all(|a| a.meets(v1))
    }

    /// Moves an intersecting family to a standardized one of the same size.
    ///
    /// The first part, scanning `V_1, …, V_a` then `W_1, …, W_c`, that meets
    /// every member is moved onto `V_1`; if it is some `W_i` the structure is
    /// swapped first. Returns the structure the result lives in, and whether
    /// it was swapped.
    pub fn standardize(
        &self,
        f: &SetFamily,
    ) -> Result<(MultipartiteUnion, bool, SetFamily), MultipartiteError> {
        if f.is_empty() {
            return Err(MultipartiteError::EmptyFamily);
        }
        if !is_intersecting(f) {
            return Err(MultipartiteError::NotIntersecting);
        }
        for side in [Side::First, Side::Second] {
            for i in 1..=self.sizes(side).len() {
                let part = self.part(side, i);
                if !f.iter().all(|a| a.meets(part)) {
                    continue;
                }
                let (m, swapped, f) = match side {
                    Side::First => (self.clone(), false, f.clone()),
                    Side::Second => (
                        self.swapped(),
                        true,
                        f.iter().map(|&a| self.swap_set(a)).collect(),
                    ),
                };
                let f = if i == 1 {
                    f
                } else {
                    m.compress(Side::First, i, &f)?
                };
                debug_assert!(m.is_standardized(&f));
                return Ok((m, swapped, f));
            }
        }
        unreachable!("an intersecting family of independent sets always has a common part")
    }

    /// `Θ_2 ∘ Θ_3 ∘ … ∘ Θ_c`, so `Θ_c` is applied first.
    ///
    /// The result is compressed, standardized, intersecting, of the same size,
    /// and any two members meet inside `V_1 ∪ W_1`.
    pub fn full_compress(&self, f: &SetFamily) -> Result<SetFamily, MultipartiteError> {
        if !is_intersecting(f) {
            return Err(MultipartiteError::NotIntersecting);
        }
        if !self.is_standardized(f) {
            return Err(MultipartiteError::NotStandardized);
        }
        let mut out = f.clone();
        for i in (2..=self.d.len()).rev() {
            out = self.compress(Side::Second, i, &out)?;
        }
        Ok(out)
    }

    /// Splits a standardized uniform family the way the EKR bound for these
    /// graphs does, next to the same split of the star at `v(1, 1)`, and
    /// evaluates each counting inequality of that argument on it.
    pub fn profile(&self, f: &SetFamily) -> Result<ProfileDecomposition, MultipartiteError> {
        if !self.is_standardized(f) {
            return Err(MultipartiteError::NotStandardized);
        }
        let r = match f.uniform_size() {
            Some(r) => r,
            None if f.is_empty() => return Err(MultipartiteError::EmptyFamily),
            None => return Err(MultipartiteError::NotUniform),
        };
        let c = self.d.len();
        let b1 = self.b[0];
        let v1 = self.part(Side::First, 1);
        let w: Vec<VertexSet> = (1..=c).map(|i| self.part(Side::Second, i)).collect();
        let t = (r - 1).min(b1);

        let class = |a: &VertexSet| (1..=c).find(|&i| a.meets(w[i - 1])).unwrap_or(0);
        let star_family = star(&self.graph, self.v(1, 1), r);
        let mut parts = vec![0; c + 1];
        let mut star_parts = vec![0; c + 1];
        for a in f {
            parts[class(a)] += 1;
        }
        for a in &star_family {
            star_parts[class(a)] += 1;
        }

        let mut cross = Vec::new();
        let mut diagnostics = Vec::new();
        let choose = |n: usize, k: usize| {
            if k > n {
                0
            } else {
                binomial(n as u64, k as u64)
            }
        };
        if 2 * r <= b1 + self.d[0] {
            diagnostics.push(Diagnostic {
                kind: Inequality::CoreBound,
                i: None,
                j: None,
                lhs: (parts[0] + parts[1]) as u64,
                rhs: choose(b1 + self.d[0] - 1, r - 1),
            });
        }
        for i in 2..=c {
            let di = self.d[i - 1];
            let s = 1.max(r.saturating_sub(di));
            let traces = |fam: &SetFamily, j: usize| {
                let members: Vec<VertexSet> = fam
                    .iter()
                    .filter(|a| class(a) == i && a.intersection(v1).len() == j)
                    .copied()
                    .collect();
                let trace = SetFamily::new(members.iter().map(|a| a.intersection(v1)));
                (members.len(), trace.len())
            };
            let mut rows = Vec::new();
            for j in s..=t {
                let (members, traces_here) = traces(f, j);
                let (_, star_traces) = traces(&star_family, j);
                rows.push(CrossRow {
                    j,
                    members,
                    traces: traces_here,
                    star_traces,
                });
            }
            let trace_count = |j: usize| {
                rows.iter()
                    .find(|row| row.j == j)
                    .map_or(0, |row| row.traces)
            };
            diagnostics.push(Diagnostic {
                kind: Inequality::CrossCount,
                i: Some(i),
                j: None,
                lhs: parts[i] as u64,
                rhs: rows
                    .iter()
                    .map(|row| row.traces as u64 * choose(di, r - row.j))
                    .sum(),
            });
            diagnostics.push(Diagnostic {
                kind: Inequality::StarCount,
                i: Some(i),
                j: None,
                lhs: star_parts[i] as u64,
                rhs: (s..=t)
                    .map(|j| choose(b1 - 1, j - 1) * choose(di, r - j))
                    .sum(),
            });
            for j in s..=t {
                if 2 * j <= b1 {
                    diagnostics.push(Diagnostic {
                        kind: Inequality::TraceBound,
                        i: Some(i),
                        j: Some(j),
                        lhs: trace_count(j) as u64,
                        rhs: choose(b1 - 1, j - 1),
                    });
                    if b1 - j <= t {
                        diagnostics.push(Diagnostic {
                            kind: Inequality::ComplementPair,
                            i: Some(i),
                            j: Some(j),
                            lhs: (trace_count(j) + trace_count(b1 - j)) as u64,
                            rhs: choose(b1, j),
                        });
                    }
                }
            }
            cross.push(CrossProfile { i, s, rows });
        }
        Ok(ProfileDecomposition {
            r,
            t,
            parts,
            star_parts,
            cross,
            diagnostics,
        })
    }

    /// A family beating the star `I_x^(r)`, `x ∈ V_1`, when all parts of each
    /// side have equal sizes `b`, `d` (so `μ = α = b + d`) and
    /// `μ/2 < r < μ`.
    ///
    /// For `r ≥ b` this is `I_x^(r)` with the members meeting `V_1` only in
    /// `x` exchanged for the members meeting `V_1` in `V_1 \ {x}`. For
    /// `r < b` any `r`-subset `U` of `V_1 \ {x}` meets every member of the
    /// star, and the star plus `U` is returned, greedily extended.
    pub fn counterexample_family(
        &self,
        r: usize,
        x: usize,
    ) -> Result<Counterexample, MultipartiteError> {
        if self.b.iter().any(|&s| s != self.b[0]) || self.d.iter().any(|&s| s != self.d[0]) {
            return Err(MultipartiteError::UnequalParts);
        }
        let (b, d) = (self.b[0], self.d[0]);
        let mu = b + d;
        if 2 * r <= mu || r >= mu {
            return Err(MultipartiteError::ROutOfRange { r, mu });
        }
        let v1 = self.part(Side::First, 1);
        if !v1.contains(x) {
            return Err(MultipartiteError::NotInFirstPart(x));
        }
        let all = independent_r_sets(&self.graph, r);
        let star_family = star(&self.graph, x, r);
        let (family, blocking) = if r >= b {
            let single = VertexSet::singleton(x);
            let rest = v1.difference(single);
            let family = SetFamily::new(
                star_family
                    .iter()
                    .filter(|a| a.intersection(v1) != single)
                    .chain(all.iter().filter(|a| a.intersection(v1) == rest))
                    .copied(),
            );
            (family, None)
        } else {
            let u: VertexSet = v1
                .difference(VertexSet::singleton(x))
                .iter()
                .take(r)
                .collect();
            let mut members: Vec<VertexSet> = star_family.members().to_vec();
            members.push(u);
            for &a in &all {
                if !members.contains(&a) && members.iter().all(|m| m.meets(a)) {
                    members.push(a);
                }
            }
            (SetFamily::new(members), Some(u))
        };
        if !is_intersecting(&family) {
            // Happens for b = 1, where the exchanged members avoid V_1 entirely.
            return Err(MultipartiteError::NotIntersecting);
        }
        let (max_star_size, _) = max_star(&self.graph, r);
        Ok(Counterexample {
            r,
            x,
            star_size: star_family.len(),
            max_star: max_star_size as usize,
            blocking,
            family,
        })
    }
}

fn join(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Output of [`MultipartiteUnion::counterexample_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub r: usize,
    pub x: usize,
    /// `|I_x^(r)|`.
    pub star_size: usize,
    /// The largest star of the graph.
    pub max_star: usize,
    /// The set `U` when the star was extended rather than reshaped.
    pub blocking: Option<VertexSet>,
    /// An intersecting family; larger than `I_x^(r)` for `b ≥ 3`.
    pub family: SetFamily,
}

impl Counterexample {
    pub fn is_anomalous(&self) -> bool {
        self.family
            .iter()
            .fold(VertexSet::full(crate::graph::MAX_ORDER), |a, s| {
                a.intersection(*s)
            })
            .is_empty()
    }

    pub fn beats_max_star(&self) -> bool {
        self.family.len() > self.max_star
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// `|A_0| + |A_1| ≤ C(b_1 + d_1 − 1, r − 1)` when `2r ≤ b_1 + d_1`.
    CoreBound,
    /// `|A_i| ≤ Σ_j |B_i^(j)| C(d_i, r − j)`.
    CrossCount,
    /// `|J_i| = Σ_j C(b_1 − 1, j − 1) C(d_i, r − j)` for the star `J`.
    StarCount,
    /// `|B_i^(j)| ≤ C(b_1 − 1, j − 1)` for `2j ≤ b_1`.
    TraceBound,
    /// `|B_i^(j)| + |B_i^(b_1 − j)| ≤ C(b_1, j)` for `2j ≤ b_1`, `b_1 − j ≤ t`.
    ComplementPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: Inequality,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

impl Diagnostic {
    pub fn holds(&self) -> bool {
        match self.kind {
            Inequality::StarCount => self.lhs == self.rhs,
            _ => self.lhs <= self.rhs,
        }
    }
}

/// Counts for one `j = |A ∩ V_1|` inside `A_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossRow {
    pub j: usize,
    /// `|A_i^(j)|`.
    pub members: usize,
    /// `|B_i^(j)|`, the distinct traces on `V_1`.
    pub traces: usize,
    /// `|K_i^(j)|`, the same for the star at `v(1, 1)`.
    pub star_traces: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossProfile {
    pub i: usize,
    /// `s_i = max(1, r − d_i)`; rows run over `s_i ≤ j ≤ t`.
    pub s: usize,
    pub rows: Vec<CrossRow>,
}

/// `A = A_0 ∪ A_1 ∪ … ∪ A_c` with `A_0` the members inside `V_1` and `A_i`
/// those meeting `W_i`, plus the same split of the star at `v(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileDecomposition {
    pub r: usize,
    /// `t = min(r − 1, b_1)`.
    pub t: usize,
    /// `|A_0|, …, |A_c|`.
    pub parts: Vec<usize>,
    /// `|J_0|, …, |J_c|`.
    pub star_parts: Vec<usize>,
    /// One entry per `i = 2, …, c`.
    pub cross: Vec<CrossProfile>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ProfileDecomposition {
    pub fn all_hold(&self) -> bool {
        self.diagnostics.iter().all(Diagnostic::holds)
    }
}

/// A random intersecting subfamily of `I^(r)(G)`: members are visited in
/// shuffled order and each compatible one is kept with probability
/// `keep`. The first visited member is always kept.
pub fn random_intersecting_family<R: Rng>(
    g: &Graph,
    r: usize,
    keep: f64,
    rng: &mut R,
) -> SetFamily {
    let mut all = independent_r_sets(g, r).members().to_vec();
    all.shuffle(rng);
    let mut chosen: Vec<VertexSet> = Vec::new();
    for a in all {
        if chosen.iter().all(|c| c.meets(a)) && (chosen.is_empty() || rng.gen_bool(keep)) {
            chosen.push(a);
        }
    }
    SetFamily::new(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ekr::{ekr_status, SearchLimits};
    use crate::indep::minimax_independence;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn labels_and_parts() {
        let m = MultipartiteUnion::new(&[3, 2], &[2, 2, 1]).unwrap();
        assert_eq!(m.v(2, 1), 3);
        assert_eq!(m.w(1, 1), 5);
        assert_eq!(m.w(3, 1), 9);
        assert_eq!(m.label(8), (Side::Second, 2, 2));
        assert_eq!(m.part(Side::Second, 2), set(&[7, 8]));
        for v in 0..10 {
            let (side, i, j) = m.label(v);
            assert_eq!(
                if side == Side::First {
                    m.v(i, j)
                } else {
                    m.w(i, j)
                },
                v
            );
        }
        let s = m.swapped();
        assert_eq!(s.graph().order(), 10);
        assert_eq!(m.swap_set(set(&[0, 9])), set(&[5, 4]));
        // Swapping relabels an isomorphism.
        for (x, y) in m.graph().edges() {
            let e = m.swap_set(set(&[x, y])).to_vec();
            assert!(s.graph().adjacent(e[0], e[1]));
        }
    }

    #[test]
    fn maps() {
        let m = MultipartiteUnion::new(&[3, 3], &[3, 3]).unwrap();
        let a = set(&[m.v(2, 1), m.w(1, 1)]);
        assert_eq!(m.phi(2, a).unwrap(), set(&[m.v(1, 1), m.w(1, 1)]));
        assert_eq!(m.theta(2, a).unwrap(), a);
        assert!(m.phi(1, a).is_err());
        assert!(m.theta(3, a).is_err());
        assert!(m.phi(2, set(&[0, 3])).is_err(), "not independent");
        for r in 1..=6 {
            for a in &independent_r_sets(m.graph(), r) {
                let img = m.phi(2, *a).unwrap();
                assert_eq!(img.len(), a.len());
                assert!(m.graph().is_independent(img));
            }
        }
    }

    #[test]
    fn compression_keeps_present_images() {
        let m = MultipartiteUnion::new(&[2], &[2, 2]).unwrap();
        // W_2 = {4, 5} maps onto W_1 = {2, 3}.
        let f = SetFamily::new([set(&[0, 4]), set(&[0, 2]), set(&[0, 5])]);
        let g = m.compress(Side::Second, 2, &f).unwrap();
        assert_eq!(g.members(), &[set(&[0, 4]), set(&[0, 2]), set(&[0, 3])]);
        let fixed = SetFamily::new([set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(m.compress(Side::Second, 2, &fixed).unwrap(), fixed);
    }

    #[test]
    fn standardize_stars() {
        let m = MultipartiteUnion::new(&[3, 3], &[3, 3]).unwrap();
        let s11 = star(m.graph(), m.v(1, 1), 3);
        let (_, swapped, f) = m.standardize(&s11).unwrap();
        assert!(!swapped);
        assert_eq!(f, s11);
        let s21 = star(m.graph(), m.v(2, 1), 3);
        let (_, _, f) = m.standardize(&s21).unwrap();
        assert_eq!(f.len(), s21.len());
        assert!(m.is_standardized(&f));
        let sw = star(m.graph(), m.w(2, 2), 3);
        let (m2, swapped, f) = m.standardize(&sw).unwrap();
        assert!(swapped && m2.is_standardized(&f) && is_intersecting(&f));
        assert_eq!(
            m.standardize(&SetFamily::new([set(&[0]), set(&[1])])),
            Err(MultipartiteError::NotIntersecting)
        );
    }

    #[test]
    fn mu_formula_matches_search() {
        for (b, d) in [
            (vec![3, 3], vec![3, 3]),
            (vec![1, 1], vec![1, 1]),
            (vec![3, 2], vec![4, 1]),
            (vec![2], vec![3, 1, 1]),
        ] {
            let m = MultipartiteUnion::new(&b, &d).unwrap();
            assert_eq!(
                m.mu_formula(),
                minimax_independence(m.graph()),
                "{b:?}+{d:?}"
            );
        }
        assert_eq!(
            MultipartiteUnion::new(&[3, 2], &[4, 1])
                .unwrap()
                .mu_formula(),
            3
        );
    }

    #[test]
    fn star_profile() {
        let m = MultipartiteUnion::new(&[3, 3], &[3, 3]).unwrap();
        let s = star(m.graph(), m.v(1, 1), 3);
        assert_eq!(s.len(), 19);
        let p = m.profile(&s).unwrap();
        assert_eq!(p.parts, p.star_parts);
        assert_eq!(p.parts.iter().sum::<usize>(), 19);
        // Inside V_1 ∪ W_1: C(5, 2) = 10 sets through v(1,1); the rest meet W_2.
        assert_eq!(p.parts, vec![1, 9, 9]);
        for row in &p.cross[0].rows {
            assert_eq!(row.star_traces as u64, binomial(2, row.j as u64 - 1));
        }
        assert!(p.all_hold());
    }

    #[test]
    fn compressions_on_random_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (b, d, r) in [
            (vec![3, 3], vec![3, 3], 3),
            (vec![2, 2], vec![2, 2, 2], 2),
            (vec![3, 2, 1], vec![3, 3, 2], 3),
        ] {
            let m = MultipartiteUnion::new(&b, &d).unwrap();
            for _ in 0..40 {
                let f = random_intersecting_family(m.graph(), r, 0.5, &mut rng);
                let (m, _, f) = m.standardize(&f).unwrap();
                for i in 2..=m.d().len() {
                    let g = m.compress(Side::Second, i, &f).unwrap();
                    assert_eq!(g.len(), f.len());
                    assert!(is_intersecting(&g) && m.is_standardized(&g));
                }
                let g = m.full_compress(&f).unwrap();
                assert_eq!(g.len(), f.len());
                assert!(m.is_compressed(&g).unwrap());
                let core = m.part(Side::First, 1).union(m.part(Side::Second, 1));
                let ms = g.members();
                for (k, x) in ms.iter().enumerate() {
                    assert!(ms[k + 1..].iter().all(|y| x.intersection(*y).meets(core)));
                }
                if 2 * r <= m.mu_formula() {
                    assert!(m.profile(&g).unwrap().all_hold());
                }
            }
        }
    }

    #[test]
    fn counterexamples() {
        let m = MultipartiteUnion::new(&[3, 3], &[3, 3]).unwrap();
        for (r, size) in [(4, 24), (5, 12)] {
            let c = m.counterexample_family(r, m.v(1, 1)).unwrap();
            assert_eq!(c.family.len(), size);
            assert!(c.is_anomalous() && c.beats_max_star());
            assert!(c.blocking.is_none());
            let rep = ekr_status(m.graph(), r, SearchLimits::default()).unwrap();
            assert_eq!(rep.max_intersecting, size);
        }
        assert_eq!(
            m.counterexample_family(3, 0),
            Err(MultipartiteError::ROutOfRange { r: 3, mu: 6 })
        );
        assert_eq!(
            m.counterexample_family(4, m.w(1, 1)),
            Err(MultipartiteError::NotInFirstPart(6))
        );
        let uneven = MultipartiteUnion::new(&[3, 2], &[3]).unwrap();
        assert_eq!(
            uneven.counterexample_family(4, 0),
            Err(MultipartiteError::UnequalParts)
        );
        // r < b: the blocking set branch.
        let m = MultipartiteUnion::new(&[5], &[1, 1]).unwrap();
        let c = m.counterexample_family(4, 0).unwrap();
        let u = c.blocking.unwrap();
        assert!(!u.contains(0) && u.len() == 4 && u.is_subset(m.part(Side::First, 1)));
        assert!(c.family.len() > c.star_size);
        assert!(c.beats_max_star());
    }

    #[test]
    fn small_parts_can_stay_ekr_above_half_mu() {
        // Equal parts, μ = α = 6 and 3 < r < 6, yet the largest star (at the
        // singleton) is a maximum intersecting family.
        let m = MultipartiteUnion::new(&[5, 5], &[1]).unwrap();
        for r in [4, 5] {
            let rep = ekr_status(m.graph(), r, SearchLimits::default()).unwrap();
            assert!(rep.is_ekr && rep.is_strictly_ekr);
            let c = m.counterexample_family(r, 0).unwrap();
            assert!(c.family.len() > c.star_size && !c.beats_max_star());
        }
        // With b = 2 the exchange gains nothing: |J| = |I_x|.
        let m = MultipartiteUnion::new(&[2, 2], &[2, 2]).unwrap();
        let c = m.counterexample_family(3, 0).unwrap();
        assert_eq!(c.family.len(), c.star_size);
        assert!(
            ekr_status(m.graph(), 3, SearchLimits::default())
                .unwrap()
                .is_ekr
        );
    }
}
