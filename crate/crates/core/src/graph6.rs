//! graph6 text encoding.
//!
//! One byte `n + 63` for the order (`n <= 62`), then the upper triangle of
//! the adjacency matrix column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`)
//! packed six bits per byte, most significant first, each byte offset by 63
//! and the last group zero-padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits must be zero.
pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: String| Err(Error::Graph6(msg));
    let Some(&first) = bytes.first() else {
        return bad("empty input".into());
    };
    if !(63..=126).contains(&first) {
        return bad(format!("invalid size byte {first}"));
    }
    let (n, body) = if first == 126 {
        // 18- or 36-bit size forms; only ever too large here
        let n = if bytes.get(1) == Some(&126) {
            decode_size_word(bytes.get(2..8))
        } else {
            decode_size_word(bytes.get(1..4))
        };
        return match n {
            Some(n) => Err(Error::TooManyVertices(n)),
            None => bad("truncated size field".into()),
        };
    } else {
        ((first - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    if body.len() != want {
        return bad(format!(
            "expected {want} data bytes for {n} vertices, found {}",
            body.len()
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for (idx, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return bad(format!("invalid data byte {b} at offset {}", idx + 1));
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            let bit = (val >> shift) & 1;
            if k < nbits {
                if bit == 1 {
                    let (i, j) = pair_at(k);
                    g.set_edge(i, j);
                }
            } else if bit != 0 {
                return bad("nonzero padding bits".into());
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size_word(chunk: Option<&[u8]>) -> Option<usize> {
    let chunk = chunk?;
    let mut n = 0usize;
    for &b in chunk {
        if !(63..=126).contains(&b) {
            return None;
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Some(n)
}

/// Index `k` in column-major upper-triangle order to the pair `(i, j)`, `i < j`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Reads one graph per nonblank line. Errors carry the 1-based line number.
pub fn read_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Graph6(format!("line {}: {e}", lineno + 1)))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        out.push(decode(t).map_err(|e| Error::Graph6(format!("line {}: {e}", lineno + 1)))?);
    }
    Ok(out)
}

pub fn write_lines<'a, W, I>(mut w: W, graphs: I) -> std::io::Result<()>
where
    W: std::io::Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        writeln!(w, "{}", encode(g))?;
    }
    Ok(())
}
