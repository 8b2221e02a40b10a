//! Largest intersecting families that lie in no star.

use ekr_core::ekr::{common_intersection, max_anomalous, max_intersecting, SearchLimits};
use ekr_core::indep::max_star;
use ekr_core::named::{icosahedron, octahedron, spiky_g};

fn main() {
    let lim = SearchLimits::default();
    for (name, g, r) in [
        ("octahedron", octahedron(), 2),
        ("icosahedron", icosahedron(), 3),
        ("spiky G(3,4)", spiky_g(3, 4).unwrap(), 3),
        ("spiky G(4,5)", spiky_g(4, 5).unwrap(), 3),
    ] {
        let star = max_star(&g, r).0;
        let best = max_intersecting(&g, r, lim).unwrap();
        println!(
            "{name}, r = {r}: max star {star}, max intersecting {}",
            best.size
        );
        match max_anomalous(&g, r, lim).unwrap() {
            Some(a) => {
                assert!(common_intersection(&a.witness).unwrap().is_empty());
                println!("  anomalous family of size {}:", a.size);
                for set in a.witness.iter() {
                    println!("    {set:?}");
                }
            }
            None => println!("  every intersecting family lies in a star"),
        }
    }
}
