//! The shift-class covering of I^(r)(G[K_m]).
//!
//! `cargo run --example katona_covering -- <spec> <m> <r>`

use ekr_core::covering::{katona_covering, shift_classes};
use ekr_core::indep::star_size;
use ekr_core::named::parse_graph_spec;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let spec = args.first().map_or("path(3)", String::as_str);
    let m: usize = args.get(1).map_or(2, |a| a.parse().unwrap());
    let r: usize = args.get(2).map_or(2, |a| a.parse().unwrap());
    let g = parse_graph_spec(spec).unwrap();
    let c = katona_covering(&g, m, r).unwrap();
    println!(
        "|I^({r})(G[K_{m}])| = {}, {} blocks, q = {:?}",
        c.ground().len(),
        c.blocks().len(),
        c.q()
    );
    for (psi, block) in shift_classes(g.order(), m).unwrap().iter().zip(c.blocks()) {
        println!("class {}: {} sets", psi.digits(), block.len());
    }
    for v in 0..g.order() {
        println!("|I_{v}^({r})(G)| = {}", star_size(&g, v, r));
    }
}
