//! graph6 text codec, bit-exact per the public format description.
//!
//! Supports the one-byte short form (n <= 62) and the `~`-prefixed three-byte
//! extension, capped at this crate's 64-vertex limit. sparse6 and digraph6 are
//! out of scope.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

impl Serialize for Graph {
    /// Graphs serialize as their canonical graph6 string.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&encode(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 encodes {0} vertices; supported range is 1..=64")]
    OrderOutOfRange(usize),
    #[error("byte {byte:#x} at position {pos} outside the graph6 alphabet (0x3f..=0x7e)")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("malformed order header: {0}")]
    BadHeader(String),
    #[error("truncated bit body: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after the bit body: {0} extra bytes")]
    TrailingData(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const OFFSET: u8 = 63;

fn check_byte(pos: usize, b: u8) -> Result<u8, Graph6Error> {
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::InvalidByte { pos, byte: b });
    }
    Ok(b - OFFSET)
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker is accepted.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text).trim_end();
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, body_start) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 8-byte form starts at n >= 258048, far beyond our 64-vertex cap.
            return Err(Graph6Error::BadHeader("8-byte order form not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader("extended order needs 3 bytes".into()));
        }
        let a = check_byte(1, bytes[1])? as usize;
        let b = check_byte(2, bytes[2])? as usize;
        let c = check_byte(3, bytes[3])? as usize;
        ((a << 12) | (b << 6) | c, 4)
    } else {
        (check_byte(0, bytes[0])? as usize, 1)
    };

    if n == 0 || n > 64 {
        return Err(Graph6Error::OrderOutOfRange(n));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < nbytes {
        return Err(Graph6Error::Truncated { expected: nbytes, found: body.len() });
    }
    if body.len() > nbytes {
        return Err(Graph6Error::TrailingData(body.len() - nbytes));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = check_byte(body_start + bit / 6, body[bit / 6])?;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// Encodes to the canonical (shortest, zero-padded) graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4_from_hand_encoding() {
        // 'C' = 4 vertices, '~' = 0b111111: all six upper-triangle bits set.
        let g = decode("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(encode(&g), "C~");
    }

    #[test]
    fn decodes_edgeless_five() {
        // 'D' = 5 vertices, ten zero bits packed into two '?' bytes.
        let g = decode("D??").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(encode(&g), "D??");
    }

    #[test]
    fn single_vertex_and_small_forms() {
        let g = decode("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(encode(&g), "@");

        // P_3 as 0-1, 1-2: bits (0,1)=1, (0,2)=0, (1,2)=1 -> 101000 -> 40+63 = 'g'
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
        assert_eq!(decode("Bg").unwrap(), p3);
    }

    #[test]
    fn extended_order_round_trip() {
        for n in [63usize, 64] {
            let mut g = Graph::empty(n).unwrap();
            for v in 1..n {
                g.add_edge(0, v).unwrap();
            }
            g.add_edge(n - 2, n - 1).unwrap();
            let s = encode(&g);
            assert!(s.starts_with('~'));
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn error_cases_are_distinct() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("C"), Err(Graph6Error::Truncated { expected: 1, found: 0 })));
        assert!(matches!(decode("C~~"), Err(Graph6Error::TrailingData(1))));
        assert!(matches!(decode("C\x1b"), Err(Graph6Error::InvalidByte { pos: 1, .. })));
        // '~' + "?A@" encodes n = 129 which exceeds the 64-vertex cap.
        assert!(matches!(decode("~?A@"), Err(Graph6Error::OrderOutOfRange(129))));
        assert!(matches!(decode("?"), Err(Graph6Error::OrderOutOfRange(0))));
        assert!(matches!(decode("~~"), Err(Graph6Error::BadHeader(_))));
    }

    #[test]
    fn header_marker_accepted() {
        assert_eq!(decode(">>graph6<<C~").unwrap().edge_count(), 6);
    }
}
