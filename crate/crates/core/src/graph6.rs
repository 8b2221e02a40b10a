//! The graph6 text encoding (as written by nauty's `geng` and `showg`).

use crate::graph::{Graph, GraphError, VertexSet, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Encodes `g` as a single graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; nonzero padding bits are rejected.
pub fn from_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty line"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(format!(
            "byte {pos} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes[0] {
        126 => {
            if bytes.get(1) == Some(&126) {
                return Err(err("8-byte size header not supported"));
            }
            if bytes.len() < 4 {
                return Err(err("truncated size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        b => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderLimit {
            n,
            limit: MAX_ORDER,
        });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "order {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if bit_count % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph};

    #[test]
    fn known_encodings() {
        assert_eq!(from_graph6("D??").unwrap(), empty_graph(5).unwrap());
        assert_eq!(from_graph6("A_").unwrap(), complete_graph(2).unwrap());
        assert_eq!(to_graph6(&complete_graph(2).unwrap()), "A_");
        assert_eq!(to_graph6(&empty_graph(5).unwrap()), "D??");
        assert_eq!(to_graph6(&empty_graph(0).unwrap()), "?");
        // Example from the format description: 5 vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6(">>graph6<<DQc\n").unwrap(), g);
    }

    #[test]
    fn long_header() {
        let g = empty_graph(70).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D?").is_err(), "too short");
        assert!(from_graph6("D???").is_err(), "too long");
        assert!(from_graph6("A`").is_err(), "padding bit set");
        assert!(from_graph6("D ?").is_err(), "bad byte");
        assert!(from_graph6("~?").is_err(), "truncated header");
    }
}
