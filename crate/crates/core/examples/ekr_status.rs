//! The full r-EKR verdict for one graph.
//!
//! `cargo run --example ekr_status -- dodecahedron 8`

use ekr_core::ekr::{ekr_status, SearchLimits};
use ekr_core::named::parse_graph_spec;
use ekr_core::report::ekr_text;

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "dodecahedron".into());
    let r: usize = args
        .next()
        .map_or(8, |a| a.parse().expect("r must be an integer"));
    let g = parse_graph_spec(&spec).unwrap();
    match ekr_status(&g, r, SearchLimits::from_env().unwrap()) {
        Ok(rep) => print!("{}", ekr_text(&rep)),
        Err(e) => eprintln!("{e}"),
    }
}
