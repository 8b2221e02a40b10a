//! An EKR report as JSON.
//!
//! `cargo run --example json_report -- "3,3+3,3" 3`

use ekr_core::ekr::{ekr_status, SearchLimits};
use ekr_core::named::parse_graph_spec;
use ekr_core::report::ekr_json;

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "icosahedron".into());
    let r: usize = args
        .next()
        .map_or(3, |a| a.parse().expect("r must be an integer"));
    let rep = ekr_status(
        &parse_graph_spec(&spec).unwrap(),
        r,
        SearchLimits::default(),
    )
    .unwrap();
    println!("{}", ekr_json(&rep));
}
