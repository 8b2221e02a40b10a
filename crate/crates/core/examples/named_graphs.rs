//! Order, size, α and μ of the built-in graph corpus.

use ekr_core::named::parse_graph_spec;
use ekr_core::report::GraphSummary;

fn main() {
    let specs = [
        "tetrahedron",
        "cube",
        "octahedron",
        "icosahedron",
        "dodecahedron",
        "spiky_F",
        "spiky_G(3,4)",
        "spiky_G(4,5)",
        "nKt(3,2)",
        "cycle(7)",
        "3,3+3,3",
    ];
    println!(
        "{:<14} {:>3} {:>6} {:>6} {:>3}",
        "graph", "n", "edges", "alpha", "mu"
    );
    for spec in specs {
        let s = GraphSummary::compute(&parse_graph_spec(spec).unwrap());
        println!(
            "{:<14} {:>3} {:>6} {:>6} {:>3}",
            s.graph, s.n, s.edges, s.alpha, s.mu
        );
    }
}
