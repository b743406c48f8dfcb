//! graph6 short form: one header byte `63 + n`, then the upper triangle in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte,
//! most significant bit first, each byte offset by 63 and zero-padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty record".into()))?;
    if !(63..=126).contains(&header) {
        return Err(Error::Graph6(format!("header byte {header} out of range")));
    }
    let n = (header - 63) as usize;
    if n > MAX_VERTICES {
        // 126 announces the long form, which is not supported.
        return Err(Error::Graph6("long-form length header not supported".into()));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n={n}, found {}", body.len())));
    }
    let mut sextets = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} at offset {} out of range", i + 1)));
        }
        sextets.push(b - 63);
    }
    let bit = |k: usize| (sextets[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: MAX_VERTICES });
    }
    Ok(String::from_utf8(encode(g)).expect("graph6 is ASCII"))
}

/// Raw graph6 bytes; also used as the canonical code of a canonically relabeled graph.
pub(crate) fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}
