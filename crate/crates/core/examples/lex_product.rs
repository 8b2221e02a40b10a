//! r-centres of G carried over to G[K_m].

use ekr_core::covering::centre_transfer_check;
use ekr_core::ekr::{ekr_status, SearchLimits};
use ekr_core::graph::{complete_graph, lex_product};
use ekr_core::named::parse_graph_spec;

fn main() {
    let lim = SearchLimits::default();
    for (spec, r) in [
        ("empty(4)", 2),
        ("path(4)", 2),
        ("cycle(5)", 2),
        ("nKt(2,3)", 2),
        ("cycle(6)", 3),
    ] {
        let g = parse_graph_spec(spec).unwrap();
        let base = ekr_status(&g, r, lim).unwrap();
        for m in 1..=3 {
            let p = lex_product(&g, &complete_graph(m).unwrap()).unwrap();
            let rep = ekr_status(&p, r, lim).unwrap();
            let transfer =
                base.is_ekr && centre_transfer_check(&g, base.centres[0], m, r, lim).unwrap();
            println!(
                "{spec}[K_{m}], r = {r}: n = {:>2}, star {:>4}, intersecting {:>4}, EKR {}, centre transfers {}",
                p.order(),
                rep.max_star,
                rep.max_intersecting,
                rep.is_ekr,
                transfer
            );
        }
    }
}
