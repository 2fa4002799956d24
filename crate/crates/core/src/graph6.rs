//! The graph6 text encoding: a size prefix followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable
//! byte (63..=126).

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} unexpected trailing bytes after offset {offset}")]
    Trailing { offset: usize, extra: usize },
    #[error("non-zero padding bits in the last byte (offset {offset})")]
    Padding { offset: usize },
}

const HEADER: &str = ">>graph6<<";

fn size_prefix(n: usize) -> Vec<u8> {
    if n < 63 {
        vec![n as u8 + 63]
    } else if n < 258048 {
        vec![126, (n >> 12 & 63) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
        v
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = size_prefix(n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset, byte });
    }
    let six = |i: usize| (bytes[i] - 63) as usize;
    let (n, start) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated { expected: 8, found: bytes.len() });
        }
        ((2..8).fold(0, |acc, i| acc << 6 | six(i)), 8)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
        }
        ((1..4).fold(0, |acc, i| acc << 6 | six(i)), 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = start + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::Trailing { offset: expected, extra: bytes.len() - expected });
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(start + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = six(expected - 1);
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: expected - 1 });
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_encodes_as_dhc() {
        assert_eq!(encode(&Graph::cycle(5)), "Dhc");
        assert_eq!(decode("Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(decode(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn known_string() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn tiny_and_large_sizes() {
        for n in [0, 1, 2, 62, 63, 64, 100] {
            let g = Graph::cycle(n);
            let s = encode(&g);
            assert_eq!(decode(&s).unwrap(), g, "n = {n}");
        }
        assert_eq!(encode(&Graph::new(0)), "?");
        assert_eq!(&encode(&Graph::new(63))[..4], "~??~");
    }

    #[test]
    fn exhaustive_round_trip_up_to_five() {
        for n in 0..=5 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(decode(&encode(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn malformed_input() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("Dh"), Err(Graph6Error::Truncated { expected: 3, found: 2 }));
        assert_eq!(decode("Dhcc"), Err(Graph6Error::Trailing { offset: 3, extra: 1 }));
        assert_eq!(decode("D h"), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        assert_eq!(decode("~?"), Err(Graph6Error::Truncated { expected: 4, found: 2 }));
        // n = 5 uses 10 bits, so the low two bits of the second byte are padding
        assert_eq!(decode("Dhd"), Err(Graph6Error::Padding { offset: 2 }));
    }
}
