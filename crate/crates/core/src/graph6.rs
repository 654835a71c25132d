//! graph6 text format for graphs of order ≤ 62 (short header form only).
//!
//! One graph per line: the header byte is `order + 63`, then the upper
//! adjacency triangle in column-major order, packed into 6-bit groups, each
//! offset by 63. Padding bits are zero.

use crate::graph::Graph;
use thiserror::Error;

pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6 supports order <= {MAX_GRAPH6_ORDER}, got {0}")]
    OrderTooLarge(usize),
    #[error("empty graph6 line")]
    Empty,
    #[error("unsupported graph6 header (long form)")]
    UnsupportedHeader,
    #[error("invalid graph6 byte {byte:#x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    #[error("graph6 line has wrong length: expected {expected} bytes, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("nonzero padding bits in graph6 line")]
    NonzeroPadding,
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(2 + n * n.saturating_sub(1) / 12);
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
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

pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::UnsupportedHeader);
    }
    if !(63..=125).contains(&first) {
        return Err(Graph6Error::InvalidByte { byte: first, pos: 0 });
    }
    let n = (first - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            got: bytes.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { byte: b, pos });
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let set = group >> k & 1 == 1;
            if bit < bit_count {
                if set {
                    let (u, v) = triangle_coords(bit);
                    g.set_edge(u, v);
                }
            } else if set {
                return Err(Graph6Error::NonzeroPadding);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle ordering: bit index -> (u, v)
/// with u < v.
fn triangle_coords(bit: usize) -> (usize, usize) {
    let mut v = 1;
    let mut base = 0;
    while base + v <= bit {
        base += v;
        v += 1;
    }
    (bit - base, v)
}

/// Parses every non-empty line of a graph6 file body.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

pub fn encode_lines(graphs: &[Graph]) -> Result<String, Graph6Error> {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&encode(g)?);
        out.push('\n');
    }
    Ok(out)
}

/// serde adapter: `#[serde(with = "crate::graph6::serde_graph6")]` stores a
/// `Graph` field as its graph6 line.
pub mod serde_graph6 {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode(g).map_err(serde::ser::Error::custom)?)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        decode(&text).map_err(Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(encode(&k3).unwrap(), "Bw");
        let single = Graph::empty(1);
        assert_eq!(encode(&single).unwrap(), "@");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        // 5-vertex graph with edges 02 04 13 34 encodes as DQc
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn decode_inverts_encode() {
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(decode("DQc\n").unwrap(), g);
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~~~"), Err(Graph6Error::UnsupportedHeader));
        assert!(matches!(decode("Bw extra"), Err(Graph6Error::WrongLength { .. })));
        assert_eq!(
            decode("B"),
            Err(Graph6Error::WrongLength { expected: 2, got: 1 })
        );
        // 'B' header with nonzero padding in the low 3 bits
        assert_eq!(decode("B\u{7f}"), Err(Graph6Error::InvalidByte { byte: 0x7f, pos: 1 }));
        assert_eq!(decode("Bs"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn order_limit() {
        assert!(encode(&Graph::empty(62)).is_ok());
        assert_eq!(encode(&Graph::empty(63)), Err(Graph6Error::OrderTooLarge(63)));
    }
}
