//! graph6 reading and writing.
//!
//! Vertex count `N(n)`: one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups. The body packs the upper triangle
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) six bits per byte,
//! most significant first, zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable by the 4-byte size field.
pub const GRAPH6_MAX_N: usize = 258_047;

pub const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// newline characters are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let base = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = line[base..].trim_end_matches(['\n', '\r']).as_bytes();

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} is outside the graph6 range 63..=126")));
        }
    }
    if bytes.is_empty() {
        return Err(err(base, "missing size field"));
    }

    let (n, body_start) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(err(base + 1, "8-byte size field is not supported"));
        }
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated size field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(err(base, format!("size field encodes {n} in long form")));
        }
        (n, 4)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(err(
            base + body_start + body.len().min(expected),
            format!("expected {expected} body bytes for n = {n}, found {}", body.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + body_start + expected - 1, "padding bits are not zero"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as graph6 without header or newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;
    use proptest::prelude::*;

    #[test]
    fn decodes_k4() {
        // 'C' = 4 vertices, '~' = 63 = all six upper-triangle bits set
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert!(g.is_complete());
    }

    #[test]
    fn decodes_single_vertex_and_empty() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn decodes_c4() {
        // 'r' = 51 = 110011: x01 x02 x12 x03 x13 x23
        let g = parse_graph6("Cr").unwrap();
        let edges: Vec<Edge> = g.edges().collect();
        assert_eq!(
            edges,
            vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(1, 3), Edge::new(2, 3)]
        );
        assert_eq!(write_graph6(&g).unwrap(), "Cr");
    }

    #[test]
    fn encodes_fixtures() {
        let k4 = Graph::from_edges(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        // petgraph's fixture: 5 vertices, edges ac ae bd de
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn header_and_newline_are_skipped() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("C\x01"), Err(Error::Graph6 { offset: 1, .. })));
        // n = 3 leaves three padding bits; 'A' = 2 sets one of them
        assert!(matches!(parse_graph6("BA"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~~??????"), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(n in 0usize..=16, bits in proptest::collection::vec(any::<bool>(), 120)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }
}
