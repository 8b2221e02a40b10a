//! Standardizing and compressing an intersecting family in a union of two
//! complete multipartite graphs, then splitting it into its profile.

use ekr_core::ekr::is_intersecting;
use ekr_core::multipartite::{random_intersecting_family, MultipartiteUnion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let m = MultipartiteUnion::from_spec("3,3+3,3,2").unwrap();
    let r = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = random_intersecting_family(m.graph(), r, 0.6, &mut rng);
    println!("random intersecting family of {} sets", f.len());

    let (m, swapped, f) = m.standardize(&f).unwrap();
    println!(
        "standardized (swapped sides: {swapped}), every set meets V_1: {}",
        m.is_standardized(&f)
    );
    let g = m.full_compress(&f).unwrap();
    println!(
        "compressed: {} sets, intersecting {}, fixed by every compression {}",
        g.len(),
        is_intersecting(&g),
        m.is_compressed(&g).unwrap()
    );

    let p = m.profile(&g).unwrap();
    println!(
        "|A_0..A_c| = {:?}, star split {:?}, t = {}",
        p.parts, p.star_parts, p.t
    );
    for c in &p.cross {
        for row in &c.rows {
            println!(
                "  i = {}, j = {}: {} sets, {} traces (star {})",
                c.i, row.j, row.members, row.traces, row.star_traces
            );
        }
    }
    for d in &p.diagnostics {
        println!(
            "  {:?} i={:?} j={:?}: {} vs {} -> {}",
            d.kind,
            d.i,
            d.j,
            d.lhs,
            d.rhs,
            if d.holds() { "ok" } else { "fails" }
        );
    }
}
