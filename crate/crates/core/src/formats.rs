//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the format description shipped with nauty
//! (<https://users.cecs.anu.edu.au/~bdm/data/formats.txt>): a size header
//! followed by the upper triangle of the adjacency matrix in column order,
//! six bits per printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
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
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix and trailing
/// whitespace are accepted). Errors report the byte offset within `line`.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.to_string() };
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        if !(63..=126).contains(&b) {
            return Err(err(i, &format!("byte 0x{b:02x} outside the printable range 63..=126")));
        }
    }
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(err(start, "empty input"));
    }
    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(err(start + body.len(), "truncated 18-bit size header"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if body.len() < 8 {
            return Err(err(start + body.len(), "truncated 36-bit size header"));
        }
        let n = body[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            start + body.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let data = &body[header_len..];
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[pos / 6] - 63;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Edge-list text: a first line `n m`, then `m` lines `u v` (0-based).
/// Blank lines and lines starting with `#` are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or(Error::EdgeList { line: 1, reason: "missing header".into() })?;
    let (n, m) = parse_pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref() {
        if edges.len() == m {
            return Err(Error::EdgeList { line, reason: format!("more than the declared {m} edges") });
        }
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(Error::EdgeList { line, reason: format!("vertex out of range for n = {n}") });
        }
        if u == v {
            return Err(Error::EdgeList { line, reason: format!("self-loop at {u}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: text.lines().count(),
            reason: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// True when the first meaningful line looks like an edge-list header
/// (two whitespace-separated integers). graph6 never contains spaces.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let parts: Vec<_> = l.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
        })
}

/// Reads every graph in a text blob: either one edge list, or one graph6
/// string per non-empty line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    if looks_like_edge_list(text) {
        return Ok(vec![from_edge_list(text)?]);
    }
    text.lines().filter(|l| !l.trim().is_empty()).map(from_graph6).collect()
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let parts: Vec<_> = l.split_whitespace().collect();
    let bad = || Error::EdgeList { line, reason: format!("expected two non-negative integers, got {l:?}") };
    if parts.len() != 2 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    Ok((a, b))
}
