//! graph6 and edge-list codecs.
//!
//! Only the one-byte size form of graph6 is supported (`n <= 62`). The body
//! holds the upper triangle of the adjacency matrix column by column,
//! `(0,1), (0,2), (1,2), (0,3), ..`, packed big-endian into 6-bit groups that
//! are each offset by 63. Padding bits must be zero.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order representable with a one-byte size field.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("size byte {0:#04x} is out of range (expected 0x3f..=0x7d)")]
    MalformedLength(u8),
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is not a graph6 character")]
    NonAsciiByte { offset: usize, byte: u8 },
    #[error("unexpected data at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("graph has {n} vertices, graph6 output supports at most {GRAPH6_MAX_ORDER}")]
    TooLarge { n: usize },
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted. Error offsets count from the size byte.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let mut text = text.strip_prefix(HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = text {
        text = rest;
    }
    let (&size, body) = text.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + GRAPH6_MAX_ORDER as u8).contains(&size) {
        return Err(Graph6Error::MalformedLength(size));
    }
    let n = (size - 63) as usize;
    let expected = body_len(n);
    for (i, &b) in body.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonAsciiByte { offset: i + 1, byte: b });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage { offset: expected + 1 });
    }

    let mut g = Graph::empty(n).expect("n <= 62");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.link(u, v);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & pad_mask != 0 {
            return Err(Graph6Error::TrailingGarbage { offset: k / 6 + 1 });
        }
    }
    Ok(g)
}

/// Encodes `g` as graph6, without header or newline.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// Parses an edge list: one `u v` pair of 0-based vertex ids per line.
///
/// Blank lines and lines starting with `#` are skipped. A line holding a
/// single id declares that vertex, so trailing isolated vertices can be
/// expressed. The order is one more than the largest id mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut edges = Vec::new();
    let mut order = 0usize;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let ids = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| EdgeListError::Syntax {
                    line,
                    message: format!("`{tok}` is not a vertex id"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        match ids[..] {
            [v] => order = order.max(v + 1),
            [u, v] => {
                if u == v {
                    return Err(EdgeListError::Graph {
                        line,
                        source: GraphError::SelfLoop { v },
                    });
                }
                order = order.max(u.max(v) + 1);
                if order > crate::graph::MAX_VERTICES {
                    return Err(EdgeListError::Graph {
                        line,
                        source: GraphError::TooLarge { n: order },
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(EdgeListError::Syntax {
                    line,
                    message: format!("expected `u v`, found {} fields", ids.len()),
                })
            }
        }
    }
    Graph::from_edges(order, edges).map_err(|source| EdgeListError::Graph {
        line: last_line,
        source,
    })
}

/// Writes `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let covered = g.open_neighborhood(g.vertices());
    if let Some(last) = g.order().checked_sub(1) {
        if !covered.contains(last) {
            out.push_str(&format!("{last}\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Strings produced by networkx.to_graph6_bytes(header=False).
    const K1: &str = "@";
    const K2: &str = "A_";
    const K3: &str = "Bw";
    const C4: &str = "Cl";
    const P4: &str = "Ch";
    const STAR4: &str = "Ds_";
    const PETERSEN: &str = "IheA@GUAo";

    #[test]
    fn decodes_fixtures() {
        let k1 = parse_graph6(K1.as_bytes()).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        assert_eq!(parse_graph6(K2.as_bytes()).unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(K3.as_bytes()).unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6(C4.as_bytes()).unwrap(), Graph::cycle(4));
        assert_eq!(parse_graph6(P4.as_bytes()).unwrap(), Graph::path(4));
        assert_eq!(parse_graph6(STAR4.as_bytes()).unwrap(), Graph::star(4));
        let pet = parse_graph6(PETERSEN.as_bytes()).unwrap();
        assert_eq!((pet.order(), pet.size()), (10, 15));
        assert!((0..10).all(|v| pet.degree(v) == 3));
    }

    #[test]
    fn encodes_fixtures() {
        assert_eq!(write_graph6(&Graph::complete(1)).unwrap(), K1);
        assert_eq!(write_graph6(&Graph::complete(2)).unwrap(), K2);
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), K3);
        assert_eq!(write_graph6(&Graph::cycle(4)).unwrap(), C4);
        assert_eq!(write_graph6(&Graph::star(4)).unwrap(), STAR4);
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn tolerates_header_and_newline() {
        assert_eq!(parse_graph6(b">>graph6<<A_\n").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(b"Bw\r\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"~"), Err(Graph6Error::MalformedLength(b'~')));
        assert_eq!(parse_graph6(b" A"), Err(Graph6Error::MalformedLength(b' ')));
        assert_eq!(
            parse_graph6(b"C"),
            Err(Graph6Error::TruncatedBody { expected: 1, found: 0 })
        );
        assert_eq!(parse_graph6(b"A_x"), Err(Graph6Error::TrailingGarbage { offset: 2 }));
        assert_eq!(
            parse_graph6(b"A\xc3"),
            Err(Graph6Error::NonAsciiByte { offset: 1, byte: 0xc3 })
        );
        // K2 with a padding bit set.
        assert!(matches!(parse_graph6(b"A`"), Err(Graph6Error::TrailingGarbage { .. })));
    }

    #[test]
    fn refuses_to_encode_large_graphs() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(write_graph6(&g), Err(Graph6Error::TooLarge { n: 63 }));
        let g = Graph::path(62);
        assert_eq!(parse_graph6(write_graph6(&g).unwrap().as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# a square\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        let g = parse_edge_list("0 1\n4\n").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.isolated_vertices().to_vec(), vec![2, 3, 4]);
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(EdgeListError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n"),
            Err(EdgeListError::Graph { line: 1, .. })
        ));
        assert!(parse_edge_list("0 1 2\n").is_err());
    }

    #[test]
    fn edge_list_round_trip_keeps_trailing_isolates() {
        let g = Graph::from_edges(5, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
