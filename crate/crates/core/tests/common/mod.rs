//! Brute-force oracles that share no code with the library searches.
#![allow(dead_code)]

use ekr_core::graph::Graph;
use proptest::prelude::*;

/// Vertex lists of every independent `r`-set, by scanning all `2^n` subsets,
/// in lexicographic order.
pub fn independent_sets(g: &Graph, r: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 22);
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != r {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&w| !g.adjacent(u, w)))
        {
            out.push(vs);
        }
    }
    out.sort();
    out
}

fn is_independent_mask(g: &Graph, mask: u32) -> bool {
    (0..g.order()).all(|u| {
        mask >> u & 1 == 0 || (u + 1..g.order()).all(|w| mask >> w & 1 == 0 || !g.adjacent(u, w))
    })
}

/// `(α, μ)` by scanning all subsets.
pub fn alpha_mu(g: &Graph) -> (usize, usize) {
    let n = g.order();
    assert!(n <= 20);
    let (mut alpha, mut mu) = (0, n);
    for mask in 0u32..1 << n {
        if !is_independent_mask(g, mask) {
            continue;
        }
        let size = mask.count_ones() as usize;
        alpha = alpha.max(size);
        let maximal = (0..n)
            .all(|v| mask >> v & 1 == 1 || (0..n).any(|u| mask >> u & 1 == 1 && g.adjacent(u, v)));
        if maximal {
            mu = mu.min(size);
        }
    }
    (alpha, mu)
}

fn meet(a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|x| b.contains(x))
}

/// Largest intersecting subfamily and largest one with empty common
/// intersection, over all subfamilies.
pub fn extremal(family: &[Vec<usize>]) -> (usize, Option<usize>) {
    let k = family.len();
    assert!(k <= 20, "oracle is exponential");
    let (mut best, mut anomalous) = (0, None);
    for mask in 1u32..1 << k {
        let chosen: Vec<&Vec<usize>> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &family[i])
            .collect();
        if !chosen
            .iter()
            .enumerate()
            .all(|(i, a)| chosen[i + 1..].iter().all(|b| meet(a, b)))
        {
            continue;
        }
        best = best.max(chosen.len());
        let common = chosen[0]
            .iter()
            .any(|x| chosen.iter().all(|s| s.contains(x)));
        if !common {
            anomalous = Some(anomalous.unwrap_or(0).max(chosen.len()));
        }
    }
    (best, anomalous)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Random simple graphs on `1..=max_n` vertices.
pub fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}
