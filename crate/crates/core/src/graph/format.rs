//! graph6 and plain edge-list text formats.
//!
//! graph6: a size prefix followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte, most significant first, each byte offset by 63.

use std::fmt::Write as _;

use super::{bit, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn g6_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are ignored; byte offsets in errors count from the start
/// of the line as given.
pub fn graph6_decode(line: &str) -> Result<Graph> {
    let mut bytes = line.as_bytes();
    let mut base = 0;
    if line.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if bytes.is_empty() {
        return Err(g6_error(base, "empty input"));
    }
    if bytes[0] == b':' || bytes[0] == b'&' {
        return Err(g6_error(base, "sparse6 and digraph6 are not supported"));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_error(base + i, format!("byte 0x{:02x} outside the range 63..=126", bytes[i])));
    }

    let (n, start) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) == Some(&126) {
        if bytes.len() < 8 {
            return Err(g6_error(base + bytes.len(), "truncated 8-byte size field"));
        }
        let n = bytes[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(g6_error(base + bytes.len(), "truncated 4-byte size field"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        let at = start + data.len().min(expected);
        return Err(g6_error(
            base + at,
            format!("expected {expected} data bytes for n = {n}, found {}", data.len()),
        ));
    }
    let pad = expected * 6 - pairs;
    if pad > 0 {
        let last = data[expected - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(g6_error(base + start + expected - 1, "non-zero padding bits"));
        }
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(adj))
}

fn el_error(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList { line, reason: reason.into() }
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| el_error(line, format!("missing {name}")))?;
        tok.parse().map_err(|_| el_error(line, format!("{name} {tok:?} is not a non-negative integer")))
    };
    let pair = (next(what)?, next(what)?);
    if it.next().is_some() {
        return Err(el_error(line, "expected exactly two integers"));
    }
    Ok(pair)
}

/// Parses the edge-list format `n m` followed by `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = meaningful_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| el_error(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header, "count")?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let mut g = Graph::empty(n)?;
    let mut last_line = hline;
    for k in 0..m {
        let (line, body) = lines
            .next()
            .ok_or_else(|| el_error(last_line + 1, format!("expected {m} edges, found {k}")))?;
        last_line = line;
        let (u, v) = parse_pair(line, body, "vertex")?;
        for w in [u, v] {
            if w >= n {
                return Err(el_error(line, format!("vertex {w} out of range for n = {n}")));
            }
        }
        if u == v {
            return Err(el_error(line, format!("self-loop at vertex {u}")));
        }
        g.set_edge(u, v);
    }
    if let Some((line, _)) = lines.next() {
        return Err(el_error(line, format!("more than the declared {m} edges")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Reads graphs from text in either format: an edge list (first meaningful
/// line is two integers) yields one graph, otherwise every non-empty line is
/// decoded as graph6.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = meaningful_lines(text).next();
    let is_edge_list = first.is_some_and(|(_, l)| {
        let toks: Vec<_> = l.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit()))
    });
    if is_edge_list {
        return Ok(vec![parse_edge_list(text)?]);
    }
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches(['\r', '\n']);
        if line.is_empty() || line == HEADER {
            continue;
        }
        let g = graph6_decode(line).map_err(|e| Error::AtLine { line: i + 1, error: Box::new(e) })?;
        graphs.push(g);
    }
    Ok(graphs)
}
