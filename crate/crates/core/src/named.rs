//! Named graphs and the textual graph specs accepted on the command line.
//!
//! Vertex numbering of the fixed graphs:
//!
//! * `tetrahedron`: `K_4`.
//! * `cube`: vertices are 3-bit words, adjacent when they differ in one bit.
//! * `octahedron`: `K_{2,2,2}` with opposite pairs `{0,1}`, `{2,3}`, `{4,5}`.
//! * `dodecahedron`: the generalized Petersen graph `GP(10,2)`; outer cycle
//!   `0..10`, spokes `i – i+10`, inner edges `10+i – 10+(i+2 mod 10)`.
//! * `icosahedron`: apex `0`, upper ring `1..=5`, lower ring `6..=10`,
//!   bottom `11`; upper `1+k` meets lower `6+k` and `6+(k+1 mod 5)`.
//! * `spiky_F`: `v_1..v_4` are `0..=3` (a clique), `v_5,v_6,v_7` are `4,5,6`
//!   with `v_{i+4}` adjacent only to `v_i`.
//! * `spiky_G(p,q)`: `spiky_F` with `v_1,v_2,v_3` blown up to `K_p` and `v_4`
//!   to `E_q`, laid out block by block as in [`generalized_lex_product`].

use crate::graph::{
    complete_graph, complete_multipartite, disjoint_union, empty_graph, generalized_lex_product,
    Graph, GraphError,
};
use crate::graph6::from_graph6;

fn bad(name: &str, reason: impl Into<String>) -> GraphError {
    GraphError::BadParams {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn arity(name: &str, params: &[usize], want: usize) -> Result<(), GraphError> {
    if params.len() == want {
        Ok(())
    } else {
        Err(bad(
            name,
            format!("expected {want} parameter(s), got {}", params.len()),
        ))
    }
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad("cycle", "a cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `n` disjoint copies of `K_t`.
pub fn disjoint_cliques(n: usize, t: usize) -> Result<Graph, GraphError> {
    let kt = complete_graph(t)?;
    (0..n).try_fold(empty_graph(0)?, |acc, _| disjoint_union(&acc, &kt))
}

pub fn tetrahedron() -> Graph {
    complete_graph(4).expect("K4")
}

pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            if u & bit == 0 {
                edges.push((u, u | bit));
            }
        }
    }
    Graph::new(8, &edges).expect("cube")
}

pub fn octahedron() -> Graph {
    complete_multipartite(&[2, 2, 2]).expect("K_{2,2,2}")
}

pub fn dodecahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, i + 10));
        edges.push((10 + i, 10 + (i + 2) % 10));
    }
    Graph::new(20, &edges).expect("dodecahedron")
}

pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for k in 0..5 {
        let upper = 1 + k;
        let lower = 6 + k;
        edges.push((0, upper));
        edges.push((11, lower));
        edges.push((upper, 1 + (k + 1) % 5));
        edges.push((lower, 6 + (k + 1) % 5));
        edges.push((upper, lower));
        edges.push((upper, 6 + (k + 1) % 5));
    }
    Graph::new(12, &edges).expect("icosahedron")
}

pub fn spiky_f() -> Graph {
    let mut edges = vec![(4, 0), (5, 1), (6, 2)];
    for u in 0..4 {
        for v in u + 1..4 {
            edges.push((u, v));
        }
    }
    Graph::new(7, &edges).expect("spiky F")
}

/// `F[v_1,v_2,v_3 : K_p; v_4 : E_q]`, order `3p + q + 3`.
pub fn spiky_g(p: usize, q: usize) -> Result<Graph, GraphError> {
    if p == 0 || q == 0 {
        return Err(bad("spiky_G", "p and q must be positive"));
    }
    let kp = complete_graph(p)?;
    let k1 = complete_graph(1)?;
    let blocks = [
        kp.clone(),
        kp.clone(),
        kp,
        empty_graph(q)?,
        k1.clone(),
        k1.clone(),
        k1,
    ];
    generalized_lex_product(&spiky_f(), &blocks)
}

/// Looks up a named graph. `params` are the integers in parentheses, if any.
pub fn named_graph(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let fixed = |g: Graph| -> Result<Graph, GraphError> {
        arity(name, params, 0)?;
        Ok(g)
    };
    let g = match name {
        "empty" => {
            arity(name, params, 1)?;
            empty_graph(params[0])?
        }
        "complete" => {
            arity(name, params, 1)?;
            complete_graph(params[0])?
        }
        "path" => {
            arity(name, params, 1)?;
            path_graph(params[0])?
        }
        "cycle" => {
            arity(name, params, 1)?;
            cycle_graph(params[0])?
        }
        "nKt" => {
            arity(name, params, 2)?;
            disjoint_cliques(params[0], params[1])?
        }
        "complete_multipartite" => complete_multipartite(params)?,
        "tetrahedron" => fixed(tetrahedron())?,
        "cube" => fixed(cube())?,
        "octahedron" => fixed(octahedron())?,
        "dodecahedron" => fixed(dodecahedron())?,
        "icosahedron" => fixed(icosahedron())?,
        "spiky_F" => fixed(spiky_f())?,
        "spiky_G" => {
            arity(name, params, 2)?;
            spiky_g(params[0], params[1])?
        }
        _ => return Err(GraphError::UnknownName(name.to_string())),
    };
    let label = if params.is_empty() {
        name.to_string()
    } else {
        let list: Vec<String> = params.iter().map(usize::to_string).collect();
        format!("{name}({})", list.join(","))
    };
    Ok(g.with_label(label))
}

/// Parses `name` or `name(a,b,…)`.
fn parse_named(spec: &str) -> Result<Option<Graph>, GraphError> {
    let (name, params) = match spec.find('(') {
        Some(open) => {
            let close = spec
                .strip_suffix(')')
                .ok_or_else(|| bad(&spec[..open], "missing `)`"))?;
            let inner = &close[open + 1..];
            let params = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|e| bad(&spec[..open], e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            (&spec[..open], params)
        }
        None => (spec, Vec::new()),
    };
    match named_graph(name, &params) {
        Err(GraphError::UnknownName(_)) => Ok(None),
        other => other.map(Some),
    }
}

/// Parses a multipartite union spec such as `3,3+3,3`. Part sizes are sorted
/// into non-increasing order; the flag reports whether that changed anything.
pub fn parse_multipartite_spec(spec: &str) -> Result<(Vec<usize>, Vec<usize>, bool), GraphError> {
    let sides: Vec<&str> = spec.split('+').collect();
    if sides.len() != 2 {
        return Err(bad(spec, "expected two part lists separated by `+`"));
    }
    let mut resorted = false;
    let mut parse_side = |side: &str| -> Result<Vec<usize>, GraphError> {
        let mut sizes = side
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| bad(spec, e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(bad(spec, "part sizes must be positive"));
        }
        let before = sizes.clone();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        resorted |= before != sizes;
        Ok(sizes)
    };
    let b = parse_side(sides[0])?;
    let d = parse_side(sides[1])?;
    Ok((b, d, resorted))
}

fn looks_multipartite(spec: &str) -> bool {
    spec.contains('+')
        && spec
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, ',' | '+' | ' '))
}

/// Resolves a CLI graph spec: a named graph, a multipartite union
/// (`b1,b2+d1,d2`), or a graph6 line, tried in that order.
pub fn parse_graph_spec(spec: &str) -> Result<Graph, GraphError> {
    let spec = spec.trim();
    if looks_multipartite(spec) {
        let (b, d, _) = parse_multipartite_spec(spec)?;
        let g = disjoint_union(&complete_multipartite(&b)?, &complete_multipartite(&d)?)?;
        return Ok(g.with_label(spec));
    }
    if let Some(g) = parse_named(spec)? {
        return Ok(g);
    }
    from_graph6(spec)
        .map(|g| g.with_label(spec))
        .map_err(|e| match e {
            GraphError::Graph6(msg) => bad(
                spec,
                format!("not a known graph name, union spec or graph6 line ({msg})"),
            ),
            other => other,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::lex_product;

    #[test]
    fn platonic_solids() {
        let d = dodecahedron();
        assert_eq!((d.order(), d.edge_count()), (20, 30));
        assert!(d.degrees().iter().all(|&k| k == 3));
        let i = icosahedron();
        assert_eq!((i.order(), i.edge_count()), (12, 30));
        assert!(i.degrees().iter().all(|&k| k == 5));
        let c = cube();
        assert_eq!((c.order(), c.edge_count()), (8, 12));
        assert_eq!(octahedron().edge_count(), 12);
        assert_eq!(tetrahedron().edge_count(), 6);
        for g in [d, i, c, octahedron(), tetrahedron()] {
            assert!(g.is_well_formed());
        }
    }

    #[test]
    fn spiky_graphs() {
        let f = spiky_f();
        assert_eq!(f.order(), 7);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(f.adjacent(u, v), u != v);
            }
        }
        assert_eq!(&f.degrees()[4..], &[1, 1, 1]);
        assert_eq!(spiky_g(3, 4).unwrap().order(), 16);
        assert_eq!(spiky_g(4, 5).unwrap().order(), 20);
        assert!(spiky_g(0, 4).is_err());
    }

    #[test]
    fn spiky_matches_constant_product_shape() {
        // All blocks K_1 gives F back.
        let k1 = complete_graph(1).unwrap();
        assert_eq!(
            generalized_lex_product(&spiky_f(), &vec![k1.clone(); 7]).unwrap(),
            spiky_f()
        );
        // Constant assignment coincides with the plain product.
        let k2 = complete_graph(2).unwrap();
        assert_eq!(
            generalized_lex_product(&spiky_f(), &vec![k2.clone(); 7]).unwrap(),
            lex_product(&spiky_f(), &k2).unwrap()
        );
    }

    #[test]
    fn small_families() {
        assert_eq!(disjoint_cliques(3, 2).unwrap().edge_count(), 3);
        assert_eq!(path_graph(4).unwrap().edge_count(), 3);
        assert_eq!(cycle_graph(5).unwrap().edge_count(), 5);
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_graph_spec("icosahedron").unwrap().order(), 12);
        assert_eq!(parse_graph_spec("spiky_G(3,4)").unwrap().order(), 16);
        assert_eq!(parse_graph_spec("empty(3)").unwrap().edge_count(), 0);
        assert_eq!(parse_graph_spec("nKt(3, 2)").unwrap().order(), 6);
        assert_eq!(
            parse_graph_spec("complete_multipartite(3,2)")
                .unwrap()
                .edge_count(),
            6
        );
        let u = parse_graph_spec("3,3+3,3").unwrap();
        assert_eq!((u.order(), u.edge_count()), (12, 18));
        assert_eq!(parse_graph_spec("A_").unwrap(), complete_graph(2).unwrap());
        assert!(parse_graph_spec("nosuchgraph!").is_err());
        assert!(parse_graph_spec("cube(3)").is_err());
        assert!(parse_graph_spec("spiky_G(3)").is_err());
    }

    #[test]
    fn multipartite_spec_sorts() {
        assert_eq!(
            parse_multipartite_spec("2,3+1,4").unwrap(),
            (vec![3, 2], vec![4, 1], true)
        );
        assert_eq!(
            parse_multipartite_spec("3,3+3,3").unwrap(),
            (vec![3, 3], vec![3, 3], false)
        );
        assert!(parse_multipartite_spec("3,3").is_err());
        assert!(parse_multipartite_spec("3,0+1").is_err());
    }
}
