//! The r = 2 verdict from α and the minimum degree, next to the search.

use ekr_core::census::graphs_of_order;
use ekr_core::ekr::{check_2ekr_formula, ekr_status, SearchLimits};
use ekr_core::graph6::to_graph6;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(5, |a| a.parse().expect("order must be an integer"));
    println!(
        "{:<8} {:>5} {:>5} {:>8} {:>8}",
        "graph6", "alpha", "delta", "formula", "search"
    );
    for g in graphs_of_order(n).iter().filter(|g| !g.is_complete()) {
        let f = check_2ekr_formula(g).unwrap();
        let s = ekr_status(g, 2, SearchLimits::default()).unwrap();
        let word = |ekr: bool, strict: bool| match (ekr, strict) {
            (true, true) => "strict",
            (true, false) => "ekr",
            _ => "no",
        };
        println!(
            "{:<8} {:>5} {:>5} {:>8} {:>8}",
            to_graph6(g),
            f.alpha,
            f.min_degree,
            word(f.is_ekr, f.is_strictly_ekr),
            word(s.is_ekr, s.is_strictly_ekr)
        );
    }
}
