//! Independent r-sets and stars of a graph.
//!
//! `cargo run --example independent_sets -- <spec> <r>`

use ekr_core::indep::{
    independent_r_sets, max_star, maximum_independent_set, minimum_maximal_independent_set, star,
};
use ekr_core::named::parse_graph_spec;

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "cycle(6)".into());
    let r: usize = args
        .next()
        .map_or(2, |a| a.parse().expect("r must be an integer"));
    let g = parse_graph_spec(&spec).unwrap();

    println!(
        "maximum independent set          {:?}",
        maximum_independent_set(&g)
    );
    println!(
        "smallest maximal independent set {:?}",
        minimum_maximal_independent_set(&g)
    );
    let family = independent_r_sets(&g, r);
    println!("|I^({r})| = {}", family.len());
    for set in family.iter().take(20) {
        println!("  {set:?}");
    }
    let (size, centres) = max_star(&g, r);
    println!("largest star: {size} sets, at {centres:?}");
    if let Some(&v) = centres.first() {
        println!("star at {v}: {:?}", star(&g, v, r).to_lists());
    }
}
