//! Encodes a few graphs as graph6 and decodes them again.
//!
//! `cargo run --example graph6_roundtrip -- [graph6 lines...]`

use ekr_core::graph6::{from_graph6, to_graph6};
use ekr_core::named::{cube, cycle_graph, dodecahedron, icosahedron};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        for line in &args {
            match from_graph6(line) {
                Ok(g) => println!("{line}: n = {}, edges = {:?}", g.order(), g.edges()),
                Err(e) => println!("{line}: {e}"),
            }
        }
        return;
    }
    for (name, g) in [
        ("C_5", cycle_graph(5).unwrap()),
        ("cube", cube()),
        ("icosahedron", icosahedron()),
        ("dodecahedron", dodecahedron()),
    ] {
        let line = to_graph6(&g);
        let back = from_graph6(&line).unwrap();
        println!("{name:<14} {line:<36} round trip ok: {}", back == g);
    }
}
