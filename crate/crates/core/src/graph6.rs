//! graph6 encoding and decoding.
//!
//! Every byte of a graph6 line is printable ASCII in `63..=126` and carries
//! six bits (`byte - 63`). The header encodes the vertex count: a single byte
//! for `n <= 62`, the marker `126` followed by three bytes (18 bits,
//! big-endian) for `n <= 258047`, and `126 126` followed by six bytes (36
//! bits) beyond that. The body packs the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, most
//! significant bit first, padded with zero bits to a multiple of six.
//!
//! Encoding always emits the canonical form: the shortest legal header and
//! zero padding bits.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG_MARKER: u8 = 126;
/// Largest vertex count encodable in the single-byte header.
pub const MAX_SHORT: usize = 62;
const MAX_LONG: usize = 258_047; // 2^18 - 1
const MAX_HUGE: u64 = (1 << 36) - 1;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| err(offset, "unexpected end of input"))?;
    if !(BIAS..=126).contains(&b) {
        return Err(err(offset, format!("byte 0x{b:02x} outside graph6 range")));
    }
    Ok(u64::from(b - BIAS))
}

fn parse_header(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if bytes[0] == LONG_MARKER {
        if bytes.get(1) == Some(&LONG_MARKER) {
            let mut n: u64 = 0;
            for i in 0..6 {
                n = (n << 6) | sextet(bytes, 2 + i)?;
            }
            let n = usize::try_from(n).map_err(|_| err(2, "vertex count overflows usize"))?;
            Ok((n, 8))
        } else {
            let mut n: u64 = 0;
            for i in 0..3 {
                n = (n << 6) | sextet(bytes, 1 + i)?;
            }
            Ok((n as usize, 4))
        }
    } else {
        let n = sextet(bytes, 0)? as usize;
        Ok((n, 1))
    }
}

/// Decodes one graph6 line. A single trailing newline is tolerated; anything
/// else after the bit field is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, header_len) = parse_header(bytes)?;

    let bits_needed = n * n.saturating_sub(1) / 2;
    let body_len = bits_needed.div_ceil(6);
    if bytes.len() < header_len + body_len {
        return Err(err(bytes.len(), "truncated bit field"));
    }
    if bytes.len() > header_len + body_len {
        return Err(err(header_len + body_len, "trailing data after bit field"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            // Every body byte holds at least one matrix bit, so this also
            // range-checks the whole bit field.
            let value = sextet(bytes, header_len + bit / 6)?;
            if (value >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("upper-triangle edges are valid");
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in canonical graph6 form.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_LONG {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else if (n as u64) <= MAX_HUGE {
        out.push(LONG_MARKER);
        out.push(LONG_MARKER);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        return Err(Error::Graph6TooLarge { n });
    }

    let mut acc: u8 = 0;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Hand-encoded constants. K3: header 'B' (3 + 63); bits x(0,1) x(0,2)
    // x(1,2) = 111, padded to 111000 = 56, so 'w' (56 + 63 = 119).
    const K3_G6: &str = "Bw";
    // K6: header 'E'; fifteen 1-bits pack to 63, 63, 56 -> "~~w".
    const K6_G6: &str = "E~~w";

    #[test]
    fn k3_round_trip_against_hand_encoding() {
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), K3_G6);
        assert_eq!(parse_graph6(K3_G6).unwrap(), Graph::complete(3));
    }

    #[test]
    fn k6_matches_hand_encoding() {
        assert_eq!(to_graph6(&Graph::complete(6)).unwrap(), K6_G6);
        assert_eq!(parse_graph6(K6_G6).unwrap(), Graph::complete(6));
    }

    #[test]
    fn tiny_graphs() {
        // 0 vertices: just the header byte 63 = '?'.
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        // 1 vertex, no bit field.
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_graph6("") {
            Err(Error::Graph6 { offset: 0, .. }) => {}
            other => panic!("expected header error, got {other:?}"),
        }
        // 5-vertex header needs 10 bits = 2 body bytes; give one.
        match parse_graph6("D~") {
            Err(Error::Graph6 { offset: 2, reason }) => {
                assert!(reason.contains("truncated"), "{reason}");
            }
            other => panic!("expected truncation error, got {other:?}"),
        }
        // Out-of-range byte inside the bit field.
        match parse_graph6("D~ ") {
            Err(Error::Graph6 { offset: 2, .. }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
        // Trailing data after a complete encoding.
        match parse_graph6("BwA") {
            Err(Error::Graph6 { offset: 2, reason }) => {
                assert!(reason.contains("trailing"), "{reason}");
            }
            other => panic!("expected trailing-data error, got {other:?}"),
        }
    }

    #[test]
    fn long_form_round_trip() {
        let g = Graph::with_edges(63, [(0, 62), (10, 20)]).unwrap();
        let s = to_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_ne!(s.as_bytes()[1], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn trailing_newline_ok() {
        assert_eq!(parse_graph6("Bw\n").unwrap(), Graph::complete(3));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
                let chosen = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, keep)| **keep)
                    .map(|(p, _)| *p);
                Graph::with_edges(n, chosen).unwrap()
            })
        })
    }

    proptest! {
        // Round trip is bit-exact: decode(encode(g)) == g, and encoding is a
        // pure function of the graph.
        #[test]
        fn round_trip_small(g in arb_graph(12)) {
            let s = to_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            prop_assert_eq!(to_graph6(&g).unwrap(), s);
        }
    }
}
