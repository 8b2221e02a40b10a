//! Simple graphs on at most 128 vertices with bit-row adjacency, plus the
//! constructions the rest of the crate is built from: complete multipartite
//! graphs, disjoint unions and (generalized) lexicographic products.

use std::fmt;

use thiserror::Error;

/// Hard ceiling on graph order: a [`VertexSet`] is a single `u128`.
pub const MAX_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("graph order {n} exceeds the limit of {limit}")]
    OrderLimit { n: usize, limit: usize },
    #[error("part sizes must be nonempty, positive and non-increasing, got {0:?}")]
    PartSizes(Vec<usize>),
    #[error("vertex {0} has no replacement graph")]
    Unassigned(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// A subset of `{0, …, 127}` stored as a bit pattern.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1u128 << v)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple graph on vertices `0..n`. Equality compares adjacency only,
/// not labels.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_limit(n, edges, MAX_ORDER)
    }

    /// Like [`Graph::new`] with a caller-chosen order limit (at most [`MAX_ORDER`]).
    pub fn with_limit(
        n: usize,
        edges: &[(usize, usize)],
        limit: usize,
    ) -> Result<Self, GraphError> {
        let limit = limit.min(MAX_ORDER);
        if n > limit {
            return Err(GraphError::OrderLimit { n, limit });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds directly from adjacency rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let g = Graph {
            n: adj.len(),
            adj,
            label: None,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].meets(set))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                all.difference(self.adj[v])
                    .difference(VertexSet::singleton(v))
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// Symmetric, loop-free, and no bits beyond `n`.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        self.adj.len() == self.n
            && (0..self.n).all(|u| {
                !self.adj[u].contains(u)
                    && self.adj[u].is_subset(all)
                    && self.adj[u].iter().all(|v| self.adj[v].contains(u))
            })
    }

    /// Subgraph induced on the first `k` vertices.
    pub fn prefix(&self, k: usize) -> Graph {
        let keep = VertexSet::full(k);
        Graph::from_rows((0..k).map(|v| self.adj[v].intersection(keep)).collect())
    }
}

pub fn empty_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, &[])
}

pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    Ok(empty_graph(n)?.complement())
}

/// `K_a[b_1, …, b_a]`: parts are laid out consecutively in list order, so the
/// `j`-th vertex of part `i` has index `b_1 + … + b_{i-1} + j`.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GraphError> {
    let descending = part_sizes.windows(2).all(|w| w[0] >= w[1]);
    if part_sizes.is_empty() || part_sizes.contains(&0) || !descending {
        return Err(GraphError::PartSizes(part_sizes.to_vec()));
    }
    let n: usize = part_sizes.iter().sum();
    if n > MAX_ORDER {
        return Err(GraphError::OrderLimit {
            n,
            limit: MAX_ORDER,
        });
    }
    let all = VertexSet::full(n);
    let mut adj = Vec::with_capacity(n);
    let mut offset = 0;
    for &size in part_sizes {
        let part = VertexSet::full(offset + size).difference(VertexSet::full(offset));
        adj.extend(std::iter::repeat_n(all.difference(part), size));
        offset += size;
    }
    Ok(Graph::from_rows(adj))
}

/// `G ⊔ H`, with the vertices of `h` shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.order() + h.order();
    if n > MAX_ORDER {
        return Err(GraphError::OrderLimit {
            n,
            limit: MAX_ORDER,
        });
    }
    let shift = g.order();
    let mut adj = g.adj.clone();
    adj.extend(
        h.adj
            .iter()
            .map(|row| VertexSet::from_bits(row.bits() << shift)),
    );
    Ok(Graph::from_rows(adj))
}

/// Lexicographic product `G[H]`; vertex `(v, w)` gets index `v·|H| + w`.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let blocks = vec![h.clone(); g.order()];
    generalized_lex_product(g, &blocks)
}

/// Replaces vertex `v` of `g` by `blocks[v]`, joining blocks of adjacent
/// vertices completely. Blocks are laid out in vertex order.
pub fn generalized_lex_product(g: &Graph, blocks: &[Graph]) -> Result<Graph, GraphError> {
    if blocks.len() < g.order() {
        return Err(GraphError::Unassigned(blocks.len()));
    }
    if let Some(v) = blocks.iter().take(g.order()).position(|b| b.order() == 0) {
        return Err(GraphError::Unassigned(v));
    }
    let blocks = &blocks[..g.order()];
    let n: usize = blocks.iter().map(Graph::order).sum();
    if n > MAX_ORDER {
        return Err(GraphError::OrderLimit {
            n,
            limit: MAX_ORDER,
        });
    }
    let mut offsets = Vec::with_capacity(g.order());
    let mut spans = Vec::with_capacity(g.order());
    let mut offset = 0;
    for b in blocks {
        offsets.push(offset);
        spans.push(VertexSet::full(offset + b.order()).difference(VertexSet::full(offset)));
        offset += b.order();
    }
    let mut adj = Vec::with_capacity(n);
    for (v, block) in blocks.iter().enumerate() {
        let across = g
            .neighbours(v)
            .iter()
            .fold(VertexSet::EMPTY, |acc, u| acc.union(spans[u]));
        for w in 0..block.order() {
            let inner = VertexSet::from_bits(block.neighbours(w).bits() << offsets[v]);
            adj.push(across.union(inner));
        }
    }
    Ok(Graph::from_rows(adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degrees() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert!(g.is_well_formed());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g, Graph::new(4, &[(0, 1)]).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(empty_graph(4).unwrap().edge_count(), 0);
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(
            Graph::new(129, &[]),
            Err(GraphError::OrderLimit { .. })
        ));
        assert!(matches!(
            Graph::with_limit(10, &[], 8),
            Err(GraphError::OrderLimit { n: 10, limit: 8 })
        ));
    }

    #[test]
    fn multipartite_shapes() {
        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(k33.edge_count(), 9);
        assert_eq!(
            complete_multipartite(&[1, 1, 1]).unwrap(),
            complete_graph(3).unwrap()
        );
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().edge_count(), 12);
        assert!(complete_multipartite(&[2, 3]).is_err());
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn unions_and_products() {
        let e2 = empty_graph(2).unwrap();
        let e3 = empty_graph(3).unwrap();
        assert_eq!(disjoint_union(&e2, &e3).unwrap(), empty_graph(5).unwrap());

        let k2 = complete_graph(2).unwrap();
        assert_eq!(lex_product(&k2, &k2).unwrap(), complete_graph(4).unwrap());

        let three_k2 = disjoint_union(&disjoint_union(&k2, &k2).unwrap(), &k2).unwrap();
        assert_eq!(lex_product(&e3, &k2).unwrap(), three_k2);
    }

    #[test]
    fn product_with_k1_is_identity() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k1 = complete_graph(1).unwrap();
        assert_eq!(lex_product(&p4, &k1).unwrap(), p4);
        let blocks = vec![k1; 4];
        assert_eq!(generalized_lex_product(&p4, &blocks).unwrap(), p4);
    }

    #[test]
    fn lex_product_degree_formula() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = Graph::new(3, &[(0, 1)]).unwrap();
        let prod = lex_product(&p4, &h).unwrap();
        assert_eq!(prod.order(), 12);
        for v in 0..4 {
            for w in 0..3 {
                assert_eq!(prod.degree(v * 3 + w), p4.degree(v) * 3 + h.degree(w));
            }
        }
    }

    #[test]
    fn generalized_product_errors() {
        let p2 = Graph::new(2, &[(0, 1)]).unwrap();
        let k1 = complete_graph(1).unwrap();
        assert_eq!(
            generalized_lex_product(&p2, std::slice::from_ref(&k1)),
            Err(GraphError::Unassigned(1))
        );
        let e0 = empty_graph(0).unwrap();
        assert_eq!(
            generalized_lex_product(&p2, &[k1, e0]),
            Err(GraphError::Unassigned(1))
        );
        let big = empty_graph(100).unwrap();
        assert!(matches!(
            lex_product(&p2, &big),
            Err(GraphError::OrderLimit { .. })
        ));
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [3, 1, 100].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 100]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(100));
        assert!(s.contains(100));
        assert!(!s.contains(200));
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(format!("{:?}", s), "{1, 3, 100}");
    }
}
