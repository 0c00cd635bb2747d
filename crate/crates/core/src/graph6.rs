//! graph6 encoding, short form only (`n <= 62`), further limited to 16 vertices.
//!
//! Layout: one byte `n + 63`, then the upper triangle read column by column,
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per byte, most
//! significant first, zero padded, each byte offset by 63.

use crate::error::{CordialError, Result};
use crate::graph::{choose2, Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + choose2(n).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some((&head, body)) = bytes.split_first() else {
        return Err(CordialError::Graph6("empty input".into()));
    };
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(CordialError::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let n = (head - 63) as usize;
    if n == 63 {
        return Err(CordialError::Graph6("long-form header not supported".into()));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(CordialError::Graph6(format!("vertex count {n} outside 1..=16")));
    }
    let nbits = choose2(n);
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(CordialError::Graph6(format!(
            "expected {expected} data bytes for n={n}, got {}",
            body.len()
        )));
    }
    let bit = |pos: usize| (body[pos / 6] - 63) >> (5 - pos % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(CordialError::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_value() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn reference_strings() {
        // a-c, a-e, b-d, d-e on five vertices
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&Graph::named("petersen").unwrap()).len(), 9);
    }

    #[test]
    fn round_trip_k4() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&k4)).unwrap(), k4);
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for n in 1..=5 {
            for bits in 0..1u128 << choose2(n) {
                let g = Graph::from_bits(n, bits).unwrap();
                assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // missing data byte
        assert!(parse_graph6("C~~").is_err()); // extra byte
        assert!(parse_graph6("C\x7f").is_err()); // charset
        assert!(parse_graph6("B_").is_ok());
        assert!(parse_graph6("B`").is_err()); // padding bit set
        assert!(parse_graph6("~??").is_err()); // long form
        assert!(parse_graph6("P").is_err()); // n = 17
        assert!(parse_graph6("?").is_err()); // n = 0
    }
}
