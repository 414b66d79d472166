//! graph6 encoding of simple graphs.
//!
//! Layout: a size header (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ..`, packed six bits per byte,
//! most significant first, each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: malformed size header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: character {byte:#04x} is outside the graph6 range")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: string ends early, {expected} bytes expected")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after the adjacency section")]
    TrailingData { offset: usize },
    #[error("graph on {0} vertices exceeds the supported size")]
    TooLarge(usize),
}

const BIAS: u8 = 63;

fn check_char(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::BadCharacter { offset, byte })
    }
}

/// Parses one graph6 line; a single trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.strip_suffix('\n').unwrap_or(line);
    let bytes = bytes.strip_suffix('\r').unwrap_or(bytes).as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;

    let (n, body_start) = if first == b'~' {
        if bytes.get(1) == Some(&b'~') {
            // 6-byte headers encode n >= 258048, far beyond the supported tier.
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | check_char(i + 1, b)? as usize;
        }
        if n < 63 {
            return Err(Graph6Error::BadHeader { offset: 0 });
        }
        (n, 4)
    } else {
        (check_char(0, first)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[body_start..];
    for (i, &b) in body.iter().enumerate().take(expected) {
        check_char(body_start + i, b)?;
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { offset: bytes.len(), expected: body_start + expected });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { offset: body_start + expected });
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Encodes `g` in graph6, using the 4-byte header for `n >= 63`.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + (n * n).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        out.extend([12u32, 6, 0].map(|s| ((n >> s) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
