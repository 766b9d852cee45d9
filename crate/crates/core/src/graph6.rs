//! graph6 encoding.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant first, each group offset by 63.
//! The final group is padded with zero bits.
//!
//! `N(n)` is one byte for `n <= 62`, `~` plus three bytes for `n <= 258047`
//! and `~~` plus six bytes above that.

use crate::error::{Graph6Error, GraphError};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

const OFFSET: u8 = 63;
const LONG: u8 = b'~';
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(LONG);
        out.push(LONG);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row[i / 64] >> (i % 64) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (OFFSET..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(Graph6Error::InvalidChar { offset, byte: b }),
        None => Err(Graph6Error::BadHeader),
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != LONG {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    let (start, len) = if bytes.get(1) == Some(&LONG) { (2, 6) } else { (1, 3) };
    let mut n = 0usize;
    for k in 0..len {
        n = n << 6 | sextet(bytes, start + k)? as usize;
    }
    // Long forms must not encode values that fit a shorter form.
    let minimum = if len == 3 { 63 } else { 258_048 };
    if n < minimum {
        return Err(Graph6Error::BadHeader);
    }
    Ok((n, start + len))
}

/// Decodes one graph6 string. An optional `>>graph6<<` prefix is accepted.
pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header_len) = read_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() != expected {
        return Err(Graph6Error::WrongLength { expected, found: payload.len() }.into());
    }

    let mut groups = Vec::with_capacity(expected);
    for k in 0..expected {
        groups.push(sextet(payload, k).map_err(|_| Graph6Error::InvalidChar {
            offset: header_len + k,
            byte: payload[k],
        })?);
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if groups[expected - 1] & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding.into());
        }
    }

    let mut b = GraphBuilder::new(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                b.set(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

// Graphs serialize as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = <std::borrow::Cow<'de, str>>::deserialize(d)?;
        from_graph6(&text).map_err(serde::de::Error::custom)
    }
}
