//! graph6 encoding and decoding.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, as `~` plus
//! three 6-bit groups for `n <= 258047`, and as `~~` plus six groups above
//! that. The upper triangle follows column by column (`(0,1), (0,2), (1,2),
//! (0,3), …`), six bits per printable byte, padded with zeros.

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Graph, Result};

const BIAS: u8 = 63;
const MAX_ORDER: u64 = 68_719_476_735;

fn push_order(out: &mut Vec<u8>, n: usize) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        assert!(n <= MAX_ORDER, "order too large for graph6");
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// graph6 bytes (no header, no trailing newline).
pub fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    push_order(&mut out, n);
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
    out
}

pub fn encode(g: &Graph) -> String {
    // every byte is in 63..=126
    String::from_utf8(encode_bytes(g)).expect("graph6 output is ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - BIAS) as u64),
        Some(_) => Err(Error::Parse { offset, reason: "byte outside the printable range 63..=126" }),
        None => Err(Error::Parse { offset, reason: "unexpected end of input" }),
    }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are accepted; offsets in errors count from the start of
/// `text`.
pub fn decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let mut pos = 0;
    if bytes.starts_with(b">>graph6<<") {
        pos = 10;
    }
    if pos == bytes.len() {
        return Err(Error::Parse { offset: pos, reason: "empty graph6 string" });
    }
    let n = if bytes[pos] != b'~' {
        let n = sextet(bytes, pos)?;
        pos += 1;
        n
    } else if bytes.get(pos + 1) != Some(&b'~') {
        let mut n = 0;
        for i in 1..=3 {
            n = n << 6 | sextet(bytes, pos + i)?;
        }
        pos += 4;
        if n <= 62 {
            return Err(Error::Parse { offset: pos - 4, reason: "non-minimal order encoding" });
        }
        n
    } else {
        let mut n = 0;
        for i in 2..=7 {
            n = n << 6 | sextet(bytes, pos + i)?;
        }
        pos += 8;
        if n <= 258_047 {
            return Err(Error::Parse { offset: pos - 8, reason: "non-minimal order encoding" });
        }
        n
    };
    let n = usize::try_from(n).map_err(|_| Error::Parse { offset: 0, reason: "order does not fit in memory" })?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or(Error::Parse { offset: 0, reason: "order does not fit in memory" })?;
    let body = bits.div_ceil(6);
    if bytes.len() - pos < body {
        return Err(Error::Parse { offset: bytes.len(), reason: "unexpected end of input" });
    }
    if bytes.len() - pos > body {
        return Err(Error::Parse { offset: pos + body, reason: "trailing bytes after adjacency data" });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let off = pos + k / 6;
            let chunk = sextet(bytes, off)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let off = pos + body - 1;
        let pad = 6 - bits % 6;
        if sextet(bytes, off)? & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse { offset: off, reason: "non-zero padding bits" });
        }
    }
    Ok(g)
}
