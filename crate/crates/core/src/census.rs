//! All graphs of small order up to isomorphism, for exhaustive sweeps when
//! no external generator is at hand.
//!
//! Graphs on `n` vertices are obtained by adding a vertex, with every
//! possible neighbourhood, to each graph on `n − 1` vertices and keeping one
//! graph per canonical form. Canonical forms come from plain
//! individualization-refinement: refine to an equitable ordered partition,
//! branch on the vertices of the first smallest non-singleton cell, and keep
//! the largest adjacency code over all discrete leaves.

use std::collections::BTreeMap;

use crate::graph::{empty_graph, Graph, VertexSet};

/// Largest order [`canonical_code`] handles (the code must fit in a `u128`).
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Ordered-partition refinement: split cells by neighbour counts into every
/// other cell until nothing changes. Splitting is order-invariant, so
/// isomorphic inputs give corresponding partitions.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter: VertexSet = cells[w].iter().copied().collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut by_count: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    by_count
                        .entry(g.neighbours(v).intersection(splitter).len())
                        .or_default()
                        .push(v);
                }
                changed |= by_count.len() > 1;
                next.extend(by_count.into_values());
            }
            cells = next;
            w += 1;
        }
        if !changed {
            return cells;
        }
    }
}

/// Upper-triangle adjacency bits of `g` relabelled by `order`, column by
/// column as in graph6, first bit most significant.
fn code(g: &Graph, order: &[usize]) -> u128 {
    let mut c = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | g.adjacent(order[i], order[j]) as u128;
        }
    }
    c
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i));
    let Some((t, _)) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = cells[..t].to_vec();
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(g, next, best);
    }
}

/// A complete isomorphism invariant together with a vertex order realizing
/// it: `order[i]` is the vertex placed at position `i`.
pub fn canonical_code(g: &Graph) -> (u128, Vec<usize>) {
    assert!(
        g.order() <= MAX_CANONICAL_ORDER,
        "canonical codes need order ≤ {MAX_CANONICAL_ORDER}"
    );
    if g.order() == 0 {
        return (0, Vec::new());
    }
    let mut best = None;
    search(g, vec![(0..g.order()).collect()], &mut best);
    best.expect("at least one leaf")
}

/// `g` relabelled into its canonical vertex order.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_code(g);
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (position[u], position[v]))
        .collect();
    Graph::new(g.order(), &edges).expect("relabelling keeps the order")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_code(g).0 == canonical_code(h).0
}

/// One graph per isomorphism class on exactly `n` vertices, in canonical
/// form, sorted by canonical code.
pub fn graphs_of_order(n: usize) -> Vec<Graph> {
    (1..=n).fold(vec![empty_graph(0).expect("order 0")], |level, k| {
        extend(&level, k)
    })
}

/// All graphs of order `1..=max_n`, grouped by order.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut level = vec![empty_graph(0).expect("order 0")];
    for k in 1..=max_n {
        level = extend(&level, k);
        out.extend(level.iter().cloned());
    }
    out
}

/// Adds vertex `k − 1` in every possible way to each graph of `level`.
fn extend(level: &[Graph], k: usize) -> Vec<Graph> {
    let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
    for g in level {
        let edges = g.edges();
        for mask in 0u32..1 << (k - 1) {
            let mut e = edges.clone();
            e.extend(
                (0..k - 1)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| (i, k - 1)),
            );
            let h = Graph::new(k, &e).expect("order within limit");
            let c = canonical_code(&h).0;
            next.entry(c).or_insert_with(|| canonical_form(&h));
        }
    }
    next.into_values().collect()
}
