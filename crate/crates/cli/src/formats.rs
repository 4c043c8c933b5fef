//! Text encodings for graphs: graph6 and a 1-based edge list.
//!
//! graph6 packs the upper triangle column by column, six bits per byte,
//! each byte offset by 63. Both the one-byte (n <= 62) and four-byte
//! (n <= 258047) size prefixes are understood.

use std::fmt::Write as _;
use std::str::FromStr;

use cograph_bei_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "el" => Ok(Format::Edgelist),
            other => Err(format!("unknown format `{other}` (expected graph6 or edgelist)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph6: byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6: truncated size prefix")]
    TruncatedSize,
    #[error("graph6: expected {expected} data bytes for n = {n}, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("graph6: padding bits must be zero")]
    Padding,
    #[error("graph6: expected a single graph, found {0} lines")]
    MultipleGraphs(usize),
    #[error("line {line}: expected header `n <count>`")]
    Header { line: usize },
    #[error("line {line}: expected `u v`")]
    Malformed { line: usize },
    #[error("line {line}: vertex {v} not in 1..={n}")]
    VertexRange { line: usize, v: usize, n: usize },
    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: usize },
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::Edgelist => to_edgelist(g),
    }
}

const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;

fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn sixbits(b: u8) -> Result<u8, ParseError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(ParseError::BadByte(b))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let line = match lines.as_slice() {
        [] => return Err(ParseError::Empty),
        [l] => *l,
        many => return Err(ParseError::MultipleGraphs(many.len())),
    };
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::Empty);
    };

    let (n, data) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            // eight-byte form is beyond anything this crate handles
            return Err(ParseError::TruncatedSize);
        }
        if bytes.len() < 4 {
            return Err(ParseError::TruncatedSize);
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = n << 6 | sixbits(b)? as usize;
        }
        (n, &bytes[4..])
    } else {
        (sixbits(first)? as usize, &bytes[1..])
    };

    let m = n * n.saturating_sub(1) / 2;
    let expected = m.div_ceil(6);
    if data.len() != expected {
        return Err(ParseError::Length { n, expected, found: data.len() });
    }
    let vals = data.iter().map(|&b| sixbits(b)).collect::<Result<Vec<u8>, _>>()?;
    let bit = |k: usize| vals[k / 6] >> (5 - k % 6) & 1 == 1;
    if (m..expected * 6).any(bit) {
        return Err(ParseError::Padding);
    }
    let edges = upper_pairs(n).enumerate().filter(|&(k, _)| bit(k)).map(|(_, e)| e);
    Ok(Graph::from_edges(n, edges).expect("pairs are in range and loop-free"))
}

/// # Panics
/// If `g` has more than 258047 vertices.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LONG_MAX, "graph6 size prefix holds at most {LONG_MAX} vertices");
    let mut out = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| (n >> s & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in upper_pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut body = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());

    let (hl, header) = body.next().ok_or(ParseError::Empty)?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|_| ParseError::Header { line: hl })?,
        _ => return Err(ParseError::Header { line: hl }),
    };

    let mut edges = Vec::new();
    for (line, l) in body {
        let nums: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| ParseError::Malformed { line })?;
        let [u, v] = nums[..] else {
            return Err(ParseError::Malformed { line });
        };
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(ParseError::VertexRange { line, v: w, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, v: u });
        }
        edges.push((u - 1, v - 1));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}
