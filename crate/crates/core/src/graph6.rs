//! graph6 encoding for graphs on up to 62 vertices.
//!
//! Byte 0 is `n + 63`. The upper triangle follows column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian into 6-bit groups,
//! zero-padded, each group written as `group + 63`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let bytes = encode_with(g.n(), |i, j| g.has_edge(i, j));
    // every byte is in 63..=126
    String::from_utf8(bytes).expect("graph6 output is ASCII")
}

/// Encodes the graph on `n` vertices whose adjacency is given by `adj(i, j)`
/// for `i < j`.
pub(crate) fn encode_with(n: usize, mut adj: impl FnMut(usize, usize) -> bool) -> Vec<u8> {
    debug_assert!((1..=MAX_VERTICES).contains(&n));
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + OFFSET);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | adj(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    out
}

/// Parses one graph6 line. A trailing line break and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(OFFSET..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first:#04x}")));
    }
    let n = (first - OFFSET) as usize;
    if n == 126 - OFFSET as usize {
        return Err(Error::Graph6("graphs with more than 62 vertices are not supported".into()));
    }
    if n == 0 {
        return Err(Error::Graph6("graph with zero vertices".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} adjacency bytes for n = {n}, found {}", body.len())));
    }
    let mut groups = Vec::with_capacity(expected);
    for &b in body {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b:#04x}")));
        }
        groups.push(b - OFFSET);
    }
    let bit = |idx: usize| groups[idx / 6] >> (5 - idx % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_is_single_char() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn known_codes() {
        // reference strings from the format description
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
    }

    #[test]
    fn five_vertex_codes_round_trip() {
        for code in ["D?{", "Dhc", "D??", "D~{", "DQo"] {
            let g = parse_graph6(code).unwrap();
            assert_eq!(to_graph6(&g), code);
        }
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<Dhc\r\n").unwrap();
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("\n").is_err());
        // size byte below 63
        assert!(parse_graph6(" ").is_err());
        // n = 0
        assert!(parse_graph6("?").is_err());
        // long-form size marker
        assert!(parse_graph6("~?@").is_err());
        // truncated and trailing garbage
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{?").is_err());
        assert!(parse_graph6("D?{ ").is_err());
        // n = 5 has 10 bits, so the last two bits of byte 2 are padding
        assert!(parse_graph6("D?|").is_err());
        assert!(parse_graph6("D?{").is_ok());
        // n = 2: one bit, five padding bits
        assert!(parse_graph6("A`").is_err());
    }
}
