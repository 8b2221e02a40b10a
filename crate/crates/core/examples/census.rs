//! Prints every graph of a given order, one graph6 line each, for piping
//! into `ekr sweep`.
//!
//! `cargo run --release --example census -- 7 | ekr sweep --out out.csv`

use std::io::{self, BufWriter, Write};

use ekr_core::census::graphs_of_order;
use ekr_core::graph6::to_graph6;

fn main() -> io::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(6, |a| a.parse().expect("order must be an integer"));
    let mut out = BufWriter::new(io::stdout().lock());
    for g in graphs_of_order(n) {
        writeln!(out, "{}", to_graph6(&g))?;
    }
    out.flush()
}
