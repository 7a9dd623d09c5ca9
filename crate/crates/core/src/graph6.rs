//! graph6 line codec.
//!
//! The format packs the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...` into 6-bit groups,
//! each offset by 63, after a header character carrying the order.
//! Only the single-byte header (order at most 62) is supported here;
//! the multi-byte header is recognized and rejected.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

/// Encode a graph as one graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = String::new();
    out.push((n as u8 + OFFSET) as char);
    let nbits = n * (n - 1) / 2;
    let mut group = 0u8;
    let mut filled = 0u32;
    let mut emitted = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + OFFSET) as char);
                group = 0;
                filled = 0;
                emitted += 6;
            }
        }
    }
    if nbits > emitted {
        group <<= 6 - filled;
        out.push((group + OFFSET) as char);
    }
    out
}

/// Decode one graph6 line. Trailing CR/LF is tolerated.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { column: i + 1, byte: b });
        }
    }
    let (n, data) = if bytes[0] == 126 {
        // Multi-byte header: order 63..258047 (or beyond with a second
        // '~'), all above the supported cap.
        if bytes.len() >= 4 && bytes[1] != 126 {
            let n = ((bytes[1] - OFFSET) as usize) << 12
                | ((bytes[2] - OFFSET) as usize) << 6
                | (bytes[3] - OFFSET) as usize;
            return Err(Graph6Error::OrderTooLarge(n));
        }
        return Err(Graph6Error::OrderTooLarge(MAX_ORDER + 1));
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: data.len() });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - OFFSET;
            if group >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if nbits > 0 {
        let last = data[expected - 1] - OFFSET;
        let pad = expected * 6 - nbits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn path_three_is_bg() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
    }

    #[test]
    fn round_trip_k23() {
        assert_eq!(decode(&encode(&k23())).unwrap(), k23());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(encode(&g), "@");
        assert_eq!(decode("@").unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("\n"), Err(Graph6Error::Empty));
        assert!(matches!(decode("B\x1f"), Err(Graph6Error::InvalidByte { column: 2, .. })));
        assert_eq!(decode("B"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(decode("Bgg"), Err(Graph6Error::TrailingData { expected: 1, found: 2 }));
        assert_eq!(decode("?"), Err(Graph6Error::ZeroOrder));
        assert_eq!(decode("~??~"), Err(Graph6Error::OrderTooLarge(63)));
    }

    #[test]
    fn nonzero_padding_rejected() {
        // P_3 needs 3 bits; the low 3 bits of the single group are padding.
        let bad = format!("B{}", (0b101001u8 + 63) as char);
        assert_eq!(decode(&bad), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn newline_tolerated() {
        assert!(decode("Bg\n").is_ok());
    }
}
