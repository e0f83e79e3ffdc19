//! Byte-exact graph6 codec (short form, order 1..=62).
//!
//! Encoding: one header byte `n + 63`, then the upper adjacency triangle in
//! column-major order — bit k is the pair (i, j) with `k = j(j-1)/2 + i` —
//! packed into sextets most-significant bit first, each sextet offset by 63.
//! The final sextet is zero-padded. Parse errors carry the byte offset of
//! the offending input byte.

use hsolab_core::graph::Graph;
use thiserror::Error;

/// Optional stream header some producers emit; accepted and skipped.
pub const STREAM_HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("long-form graph6 (order > 62) is not supported, at byte offset {offset}")]
    LongForm { offset: usize },
    #[error("invalid byte 0x{byte:02x} at byte offset {offset} (graph6 bytes are 63..=126)")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 order 0 is not representable as a graph here")]
    ZeroOrder,
    #[error("truncated graph6 body: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after graph6 body at byte offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in final sextet at byte offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph of order {n} does not fit the short graph6 form (max 62)")]
    OrderTooLarge { n: usize },
}

/// Parses one short-form graph6 line (an optional `>>graph6<<` prefix is
/// skipped). The whole line must be consumed; anything after the body is an
/// error with its offset.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let skip = if line.starts_with(STREAM_HEADER) { STREAM_HEADER.len() } else { 0 };
    let rest = &line[skip..];
    if rest.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let header = rest[0];
    if header == 126 {
        return Err(Graph6Error::LongForm { offset: skip });
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::InvalidByte { offset: skip, byte: header });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &rest[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage { offset: skip + 1 + expected });
    }
    for (idx, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset: skip + 1 + idx, byte });
        }
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in bits..expected * 6 {
        if bit(pad) {
            return Err(Graph6Error::NonzeroPadding { offset: skip + 1 + pad / 6 });
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("triangle bits define a simple graph"))
}

/// Writes the short graph6 form; inverse of [`parse_graph6`] on the same
/// labeled graph.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > 62 {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let mut out = vec![(n + 63) as u8];
    let mut sextet = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            sextet = sextet << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(sextet + 63);
                sextet = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((sextet << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hsolab_core::graph::Family;

    // Reference encodings cross-checked against an independent graph6
    // implementation.
    const REFERENCES: &[(&str, &str)] = &[
        ("@", "K1"),
        ("A_", "K2"),
        ("Bw", "K3"),
        ("Bg", "P3"),
        ("C~", "K4"),
        ("Ch", "P4"),
        ("Cl", "C4"),
        ("Cs", "S4"),
        ("Dhc", "C5"),
        ("D~{", "K5"),
        ("Esa?", "S6"),
        ("EhEG", "C6"),
        ("EhCG", "P6"),
        ("KhCGGC@?G?_@", "P12"),
    ];

    fn named(tag: &str) -> Graph {
        let (family, n) = match tag.split_at(1) {
            ("K", n) => (Family::Complete, n),
            ("P", n) => (Family::Path, n),
            ("C", n) => (Family::Cycle, n),
            ("S", n) => (Family::Star, n),
            _ => unreachable!(),
        };
        family.build(n.parse().unwrap()).unwrap()
    }

    #[test]
    fn reference_encodings_roundtrip() {
        for &(code, tag) in REFERENCES {
            let parsed = parse_graph6(code.as_bytes()).unwrap();
            let expected = named(tag);
            assert_eq!(parsed.order(), expected.order(), "{tag}");
            // Same labeled graph for these canonical constructions.
            assert_eq!(
                parsed.edges().collect::<Vec<_>>(),
                expected.edges().collect::<Vec<_>>(),
                "{tag}"
            );
            assert_eq!(write_graph6(&expected).unwrap(), code, "{tag}");
        }
    }

    #[test]
    fn k3_parses_from_bw() {
        let g = parse_graph6(b"Bw").unwrap();
        assert!(g.is_complete());
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn header_prefix_is_skipped() {
        let g = parse_graph6(b">>graph6<<Bw").unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn error_offsets() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(b"B"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        // '1' is 0x31, below the graph6 byte range.
        assert_eq!(parse_graph6(b"A1"), Err(Graph6Error::InvalidByte { offset: 1, byte: 0x31 }));
        assert_eq!(parse_graph6(b" w"), Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' }));
        assert_eq!(parse_graph6(b"~??"), Err(Graph6Error::LongForm { offset: 0 }));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::ZeroOrder));
        assert_eq!(parse_graph6(b"BwBw"), Err(Graph6Error::TrailingGarbage { offset: 2 }));
        // K2 is "A_" (sextet 100000); 'p' is sextet 110001, which sets two
        // of the five padding bits after the single data bit.
        assert_eq!(parse_graph6(b"Ap"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert_eq!(parse_graph6(b">>graph6<<A1").unwrap_err(),
            Graph6Error::InvalidByte { offset: 11, byte: 0x31 });
    }

    #[test]
    fn write_rejects_large_orders() {
        let g = Graph::from_edges(63, &[(0, 1)]).unwrap();
        assert_eq!(write_graph6(&g), Err(Graph6Error::OrderTooLarge { n: 63 }));
        let g62 = Graph::from_edges(62, &[(0, 61)]).unwrap();
        let encoded = write_graph6(&g62).unwrap();
        assert_eq!(parse_graph6(encoded.as_bytes()).unwrap(), g62);
    }

    #[test]
    fn roundtrip_all_connected_up_to_six() {
        use hsolab_core::enumeration::{enumerate, EnumerationPlan};
        use hsolab_core::graph::GraphClassSpec;
        for n in 1..=6 {
            let plan = EnumerationPlan::new(GraphClassSpec::connected(n), false);
            for g in enumerate(&plan).unwrap() {
                let encoded = write_graph6(&g).unwrap();
                assert_eq!(parse_graph6(encoded.as_bytes()).unwrap(), g);
            }
        }
    }
}
