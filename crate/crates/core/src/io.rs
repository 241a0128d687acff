//! graph6 and edge-list text formats.
//!
//! graph6 follows the standard encoding: a size header `N(n)` then the
//! upper triangle of the adjacency matrix, column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ..`), packed six bits per byte with 63
//! added. The edge-list format is the vertex count on the first line
//! followed by one `u v` pair per line, 0-indexed.

use std::fmt;
use std::str::FromStr;

use crate::bitset::CAPACITY;
use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edges" | "edge_list" | "edge-list" => Ok(Format::EdgeList),
            _ => Err(GraphError::InvalidParameter(format!("unknown graph format '{s}'"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edges",
        })
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph, GraphError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

const HEADER: &[u8] = b">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { offset, message: message.into() }
}

/// Parses a single graph6 record. An optional `>>graph6<<` header and
/// trailing whitespace are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let end = text.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(0, |i| i + 1);
    let body = &text[..end.max(pos)];

    let take = |pos: &mut usize| -> Result<u8, GraphError> {
        let b = *body.get(*pos).ok_or_else(|| parse_err(*pos, "unexpected end of graph6 data"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(*pos, format!("byte 0x{b:02x} outside graph6 range")));
        }
        *pos += 1;
        Ok(b - 63)
    };

    let first = take(&mut pos)?;
    let n = if first < 63 {
        first as usize
    } else {
        let second_at = pos;
        let mut words = 3;
        if body.get(pos) == Some(&126) {
            pos += 1;
            words = 6;
        }
        let mut n = 0usize;
        for _ in 0..words {
            n = (n << 6) | take(&mut pos)? as usize;
        }
        if n > CAPACITY {
            return Err(GraphError::CapacityExceeded { requested: n, capacity: CAPACITY });
        }
        if n < 63 {
            return Err(parse_err(second_at, "non-canonical size header"));
        }
        n
    };

    let mut g = Graph::edgeless(n)?;
    let bits = n * n.saturating_sub(1) / 2;
    let bytes = bits.div_ceil(6);
    let mut k = 0;
    for _ in 0..bytes {
        let at = pos;
        let chunk = take(&mut pos)?;
        for shift in (0..6).rev() {
            let bit = (chunk >> shift) & 1 == 1;
            if k < bits {
                if bit {
                    let (i, j) = triangle_pair(k);
                    g.add_edge(i, j);
                }
            } else if bit {
                return Err(parse_err(at, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    if pos != body.len() {
        return Err(parse_err(pos, "trailing data after graph6 record"));
    }
    Ok(g)
}

/// Position `k` of the column-major upper triangle as `(row, column)`.
fn triangle_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Parses one graph6 record per non-empty line.
pub fn parse_graph6_list(text: &[u8]) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split(|&b| b == b'\n') {
        let trimmed = line.strip_suffix(b"\r").unwrap_or(line);
        if !trimmed.iter().all(u8::is_ascii_whitespace) {
            out.push(parse_graph6(trimmed).map_err(|e| match e {
                GraphError::Parse { offset: o, message } => GraphError::Parse { offset: offset + o, message },
                other => other,
            })?);
        }
        offset += line.len() + 1;
    }
    Ok(out)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph, GraphError> {
    let text = std::str::from_utf8(text).map_err(|e| parse_err(e.valid_up_to(), "invalid UTF-8"))?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split('\n') {
        let content = line.split('#').next().unwrap_or("").trim();
        let line_start = offset;
        offset += line.len() + 1;
        if content.is_empty() {
            continue;
        }
        let at = line_start + line.find(|c: char| !c.is_whitespace()).unwrap_or(0);
        let fields: Vec<&str> = content.split_whitespace().collect();
        let num =
            |s: &str| s.parse::<usize>().map_err(|_| parse_err(at, format!("expected a vertex index, got '{s}'")));
        match (n, fields.as_slice()) {
            (None, [count]) => {
                let count = num(count)?;
                if count > CAPACITY {
                    return Err(GraphError::CapacityExceeded { requested: count, capacity: CAPACITY });
                }
                n = Some(count);
            }
            (None, _) => return Err(parse_err(at, "first line must hold the vertex count")),
            (Some(n), [u, v]) => {
                let (u, v) = (num(u)?, num(v)?);
                for w in [u, v] {
                    if w >= n {
                        return Err(GraphError::VertexOutOfRange { vertex: w, n });
                    }
                }
                if u == v {
                    return Err(parse_err(at, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            (Some(_), _) => return Err(parse_err(at, "expected 'u v'")),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing vertex count"))?;
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use proptest::prelude::*;

    #[test]
    fn edge_list_k2() {
        let g = parse_edge_list(b"2\n0 1").unwrap();
        assert_eq!(g, FamilySpec::Complete(2).generate().unwrap());
    }

    #[test]
    fn edge_list_out_of_range() {
        assert!(matches!(parse_edge_list(b"3\n0 1\n1 5"), Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })));
    }

    #[test]
    fn edge_list_parse_errors_carry_offsets() {
        match parse_edge_list(b"3\n0 1\n1 x\n") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list(b""), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_edge_list(b"999\n"), Err(GraphError::CapacityExceeded { .. })));
    }

    /// Reference decoding computed independently (networkx `from_graph6_bytes`):
    /// `D?{` is the star with center 4.
    #[test]
    fn graph6_known_string() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        assert!(parse_graph6(b">>graph6<<D?{\n").is_ok());
    }

    #[test]
    fn graph6_matches_published_encodings() {
        // Strings as produced by nauty's geng / networkx.
        let k4 = FamilySpec::Complete(4).generate().unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        let p5 = FamilySpec::Path(5).generate().unwrap();
        assert_eq!(to_graph6(&p5), "DhC");
        assert_eq!(to_graph6(&Graph::edgeless(0).unwrap()), "?");
        let big = Graph::edgeless(70).unwrap();
        let text = to_graph6(&big);
        assert!(text.starts_with("~?@E"));
        assert_eq!(parse_graph6(text.as_bytes()).unwrap().n(), 70);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(b"D?"), Err(GraphError::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6(b"D? {"), Err(GraphError::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6(b"D?{?"), Err(GraphError::Parse { offset: 3, .. })));
        // 2 vertices use one payload bit; the other five must be zero.
        assert!(matches!(parse_graph6(b"AA"), Err(GraphError::Parse { .. })));
        assert!(matches!(parse_graph6(b"~?G?"), Err(GraphError::CapacityExceeded { .. })));
    }

    #[test]
    fn graph6_list_offsets() {
        let gs = parse_graph6_list(b"A_\nBw\n\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edge_count(), 3);
        match parse_graph6_list(b"A_\nB!\n") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    fn families() -> Vec<FamilySpec> {
        use FamilySpec::*;
        let mut v = Vec::new();
        for n in 0..=8 {
            v.extend([Complete(n), Edgeless(n), Path(n), Star(n)]);
            if n >= 3 {
                v.push(Cycle(n));
            }
            if (1..=3).contains(&n) {
                v.extend([XGraph(n), XPrimeGraph(n), PendantX(n), XPlusEdge(n)]);
            }
            for m in 0..=n.min(8 - n) {
                v.push(CompleteBipartite(m, n));
            }
            v.push(ErdosRenyi { n, p: 0.5, seed: n as u64 });
        }
        v
    }

    #[test]
    fn round_trip_generated_families() {
        for spec in families() {
            let g = spec.generate().unwrap();
            for format in [Format::Graph6, Format::EdgeList] {
                let text = serialize_graph(&g, format);
                assert_eq!(parse_graph(text.as_bytes(), format).unwrap(), g, "{spec} via {format}");
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_random(n in 0usize..80, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = FamilySpec::ErdosRenyi { n, p, seed }.generate().unwrap();
            prop_assert_eq!(&parse_graph6(to_graph6(&g).as_bytes()).unwrap(), &g);
            prop_assert_eq!(&parse_edge_list(to_edge_list(&g).as_bytes()).unwrap(), &g);
        }
    }
}
