//! graph6 encoding and a plain edge-list loader.
//!
//! graph6 stores `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ..`), six bits per
//! byte, most significant bit first, each byte offset by 63.

use crate::error::{Graph6Error, GraphError};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

const BIAS: u8 = 63;

fn header(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + BIAS]
    } else if n <= 258_047 {
        vec![
            126,
            ((n >> 12) & 63) as u8 + BIAS,
            ((n >> 6) & 63) as u8 + BIAS,
            (n & 63) as u8 + BIAS,
        ]
    } else {
        let mut h = vec![126, 126];
        for shift in (0..6).rev() {
            h.push(((n >> (6 * shift)) & 63) as u8 + BIAS);
        }
        h
    }
}

pub fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = header(n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + BIAS);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + BIAS);
    }
    out
}

pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_bytes(g)).expect("graph6 is printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::OutOfAlphabet { byte: b, offset });
    }
    Ok((b - BIAS) as usize)
}

fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes
        .first()
        .ok_or_else(|| Graph6Error::MalformedHeader("empty input".into()))?;
    if first != 126 {
        return Ok((sextet(bytes, 0)?, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + width {
        return Err(Graph6Error::MalformedHeader(format!(
            "long-form size needs {width} bytes after the marker"
        )));
    }
    let mut n = 0usize;
    for off in start..start + width {
        n = (n << 6) | sextet(bytes, off)?;
    }
    let canonical = if width == 3 { n >= 63 } else { n >= 258_048 };
    if !canonical {
        return Err(Graph6Error::MalformedHeader(format!(
            "size {n} must use the shorter header form"
        )));
    }
    Ok((n, start + width))
}

pub fn decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, body_start) = parse_header(bytes)?;
    if n > crate::graph::CAPACITY {
        return Err(GraphError::CapacityExceeded { requested: n }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfAlphabet { byte: b, offset: body_start + i });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage { extra: body.len() - expected });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn decode_str(s: &str) -> Result<Graph, Graph6Error> {
    decode(s.as_bytes())
}

/// Parses `u v` lines (0-indexed). Blank lines and `#` comments are skipped.
/// The vertex count is one more than the largest label, or `min_n` if larger.
pub fn parse_edge_list(text: &str, min_n: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = min_n;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut next = || -> Result<usize, GraphError> {
            it.next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GraphError::Infeasible(format!("line {}: expected `u v`", lineno + 1)))
        };
        let (u, v) = (next()?, next()?);
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

/// Graphs serialise as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        decode_str(&s).map_err(serde::de::Error::custom)
    }
}
