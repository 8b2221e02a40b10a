//! Intersecting families beating a star above μ/2 in unions of two complete
//! multipartite graphs with equal parts. The construction starts from the
//! star at `v(1, 1)`; when the largest star lies in the second graph it may
//! not beat that one, while the search still finds a larger family.

use ekr_core::ekr::{ekr_status, SearchLimits};
use ekr_core::multipartite::MultipartiteUnion;

fn main() {
    for (spec, rs) in [
        ("3,3+3,3", 4..=5),
        ("4,4+4", 5..=7),
        ("5,5+1", 4..=5),
        ("2,2+2,2", 3..=3),
    ] {
        let m = MultipartiteUnion::from_spec(spec).unwrap();
        for r in rs {
            let c = m.counterexample_family(r, m.v(1, 1)).unwrap();
            let rep = ekr_status(m.graph(), r, SearchLimits::default()).unwrap();
            println!(
                "{spec}, r = {r}: |I_x| = {}, family {}, anomalous {}, max star {}, beats it {}, search max {}",
                c.star_size,
                c.family.len(),
                c.is_anomalous(),
                c.max_star,
                c.beats_max_star(),
                rep.max_intersecting
            );
        }
    }
}
