//! Graph interchange formats: graph6 (canonical, headerless) and a plain
//! edge-list text format (`"n m"` header line, then `m` lines `"u v"`).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest accepted vertex count; keeps adjacency storage at desk scale.
pub const MAX_VERTICES: usize = 16_384;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record. A single trailing newline is tolerated; parse
/// errors carry the byte offset of the offending position.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 string"));
    }
    let check = |i: usize| -> Result<u64> {
        let b = bytes[i];
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#x} outside graph6 range 63..=126")));
        }
        Ok(u64::from(b - 63))
    };

    // Header: n <= 62 is one byte; 126 escapes to a 3-byte (18-bit) count and
    // 126 126 to a 6-byte (36-bit) count.
    let (n, header_len) = if bytes[0] != 126 {
        (check(0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated graph6 header"));
        }
        let n = (check(1)? << 12) | (check(2)? << 6) | check(3)?;
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(parse_err(bytes.len(), "truncated graph6 header"));
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | check(i)?;
        }
        (n, 8)
    };

    if n == 0 {
        return Err(parse_err(0, "graph6 record with zero vertices"));
    }
    if n > MAX_VERTICES as u64 {
        return Err(parse_err(
            0,
            format!("graph on {n} vertices exceeds supported maximum {MAX_VERTICES}"),
        ));
    }
    let n = n as usize;

    let pair_bits = n * (n - 1) / 2;
    let payload_len = pair_bits.div_ceil(6);
    if bytes.len() < header_len + payload_len {
        return Err(parse_err(bytes.len(), "truncated graph6 bit payload"));
    }
    if bytes.len() > header_len + payload_len {
        return Err(parse_err(header_len + payload_len, "trailing data after graph6 record"));
    }

    let mut edges = Vec::new();
    let mut t = 0usize; // bit cursor over the upper triangle, column by column
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = header_len + t / 6;
            let val = check(byte)?;
            if val >> (5 - t % 6) & 1 == 1 {
                edges.push((u, v));
            }
            t += 1;
            if t == pair_bits {
                break 'outer;
            }
        }
    }
    // The final partial group must be zero-padded (canonical form).
    if !pair_bits.is_multiple_of(6) && payload_len > 0 {
        let last = check(header_len + payload_len - 1)?;
        let pad = 6 - pair_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(
                header_len + payload_len - 1,
                "nonzero padding bits in final graph6 group",
            ));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encodes a graph as a canonical graph6 record (no trailing newline).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the plain edge-list format: first line `"n m"`, then `m` lines
/// `"u v"`. Blank lines and `#` comments are ignored; duplicate edges
/// collapse. Parse errors report the 1-based line number as the offset.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty edge-list input"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line_no, "expected header line \"n m\""))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line_no, "expected header line \"n m\""))?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens on header line"));
    }
    if n > MAX_VERTICES {
        return Err(parse_err(
            line_no,
            format!("graph on {n} vertices exceeds supported maximum {MAX_VERTICES}"),
        ));
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines, input ended early")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected edge line \"u v\""))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "expected edge line \"u v\""))?;
        if it.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens on edge line"));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "unexpected data after last edge"));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the edge-list format (with trailing newline).
pub fn write_edge_list(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    let mut out = format!("{} {}\n", n, edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_k2() {
        // Independently derived: n=2 is 'A' (63+2), the single upper-triangle
        // bit packs as 100000 -> 32+63 = 95 = '_'.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(serialize_graph6(&g), "A_");
    }

    #[test]
    fn graph6_edgeless_n5() {
        // 'D' is n=5; C(5,2)=10 bits -> two all-zero groups '??'.
        let g = parse_graph6("D??").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(serialize_graph6(&g), "D??");
    }

    #[test]
    fn graph6_single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(serialize_graph6(&g), "@");
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph6("") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // n=5 needs 2 payload bytes, only 1 given
        match parse_graph6("D?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        // byte below 63 inside payload
        match parse_graph6("D?\n?") {
            Err(e) => assert!(matches!(e, Error::Parse { .. })),
            other => panic!("expected parse error, got {other:?}"),
        }
        // trailing data
        match parse_graph6("A_x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        // nonzero padding is non-canonical
        match parse_graph6("A`") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn graph6_large_n_header() {
        let g = Graph::edgeless(100).unwrap();
        let s = serialize_graph6(&g);
        assert!(s.starts_with('~'));
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn graph6_header_boundary() {
        // n = 62 is the last single-byte header, n = 63 the first escaped one
        for n in [62usize, 63] {
            let g = Graph::gnp(n, 0.3, 5).unwrap();
            let s = serialize_graph6(&g);
            assert_eq!(s.starts_with('~'), n == 63);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        // comments and blank lines are fine
        let g = parse_edge_list("# a triangle\n3 3\n\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    proptest! {
        #[test]
        fn graph6_roundtrip_random(n in 1usize..30, seed in 0u64..5000, p in 0.0f64..1.0) {
            let g = Graph::gnp(n, p, seed).unwrap();
            let s = serialize_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            // serialize(parse(s)) == s on canonical strings
            prop_assert_eq!(serialize_graph6(&parse_graph6(&s).unwrap()), s);
        }

        #[test]
        fn edge_list_roundtrip_random(n in 1usize..25, seed in 0u64..2000) {
            let g = Graph::gnp(n, 0.4, seed).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
