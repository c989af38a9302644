//! Text formats: edge lists (plain and weighted) and graph6.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::Graph;
use crate::weighted::WeightedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("malformed header `{0}`: expected `n m`")]
    BadHeader(String),
    #[error("line {line}: expected `{expected}`, got `{text}`")]
    BadEdgeLine { line: usize, expected: &'static str, text: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop at vertex {0}", .vertex)]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: weight must be a positive integer or fraction p/q")]
    BadWeight { line: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: byte {0:#04x} outside the printable range 63..=126")]
    Graph6BadByte(u8),
    #[error("graph6: orders above 258047 not supported")]
    Graph6OrderTooLarge,
    #[error("graph6: expected {expected} bytes for the edge bits, found {found}")]
    Graph6LengthMismatch { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    Graph6BadPadding,
}

fn parse_usize(
    tok: &str,
    line: usize,
    expected: &'static str,
    full: &str,
) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::BadEdgeLine {
        line,
        expected,
        text: full.to_string(),
    })
}

/// Lines of a graph file: blank lines skipped, indices retained for
/// error messages (1-based).
fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses the plain edge-list format:
///
/// ```text
/// n m
/// u v
/// ...
/// ```
///
/// Exactly `m` edge lines must follow; loops and repeated edges are
/// rejected.
pub fn parse_edge_list(s: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(s);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (
            parse_usize(a, hline, "n m", header)?,
            parse_usize(b, hline, "n m", header)?,
        ),
        _ => return Err(FormatError::BadHeader(header.to_string())),
    };
    let mut g = Graph::empty(n);
    let mut found = 0usize;
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (
                parse_usize(a, lno, "u v", line)?,
                parse_usize(b, lno, "u v", line)?,
            ),
            _ => {
                return Err(FormatError::BadEdgeLine {
                    line: lno,
                    expected: "u v",
                    text: line.to_string(),
                })
            }
        };
        check_endpoints(&g, u, v, lno)?;
        if g.has_edge(u, v) {
            return Err(FormatError::DuplicateEdge { line: lno, u: u.min(v), v: u.max(v) });
        }
        g = g.add_edge(u, v).expect("validated above");
        found += 1;
    }
    if found != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

fn check_endpoints(g: &Graph, u: usize, v: usize, line: usize) -> Result<(), FormatError> {
    for x in [u, v] {
        if x >= g.n() {
            return Err(FormatError::VertexOutOfRange { line, vertex: x, n: g.n() });
        }
    }
    if u == v {
        return Err(FormatError::Loop { line, vertex: u });
    }
    Ok(())
}

/// Writes the plain edge-list format; inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Parses the weighted edge-list format: header `n m`, then `m` lines
/// `u v w` with `w` a positive integer or fraction `p/q`. Parallel edges
/// are allowed; loops are not.
pub fn parse_weighted_edge_list(s: &str) -> Result<WeightedGraph, FormatError> {
    let mut lines = content_lines(s);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (
            parse_usize(a, hline, "n m", header)?,
            parse_usize(b, hline, "n m", header)?,
        ),
        _ => return Err(FormatError::BadHeader(header.to_string())),
    };
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v, w) = match (it.next(), it.next(), it.next(), it.next()) {
            (Some(a), Some(b), Some(c), None) => (
                parse_usize(a, lno, "u v p/q", line)?,
                parse_usize(b, lno, "u v p/q", line)?,
                parse_weight(c, lno)?,
            ),
            _ => {
                return Err(FormatError::BadEdgeLine {
                    line: lno,
                    expected: "u v p/q",
                    text: line.to_string(),
                })
            }
        };
        if u >= n || v >= n {
            let vertex = if u >= n { u } else { v };
            return Err(FormatError::VertexOutOfRange { line: lno, vertex, n });
        }
        if u == v {
            return Err(FormatError::Loop { line: lno, vertex: u });
        }
        edges.push((u, v, w));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    Ok(WeightedGraph::new(n, edges).expect("validated above"))
}

fn parse_weight(tok: &str, line: usize) -> Result<BigRational, FormatError> {
    let bad = || FormatError::BadWeight { line };
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    let w = BigRational::new(p, q);
    if w <= BigRational::zero() {
        return Err(bad());
    }
    Ok(w)
}

/// Writes the weighted edge-list format; weights always as `p/q`.
pub fn write_weighted_edge_list(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v, w) in g.edges() {
        out.push_str(&format!("{} {} {}/{}\n", u, v, w.numer(), w.denom()));
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Encodes a graph in graph6 format (orders up to 258047).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 supports at most 258047 vertices here");
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    // upper triangle column by column: bit (u, v) for v = 1..n, u < v
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).expect("all bytes printable")
}

/// Decodes a graph6 string (optionally prefixed with `>>graph6<<`).
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s).trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::Graph6BadByte(b));
        }
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // the 8-byte form encodes n > 258047
            return Err(FormatError::Graph6OrderTooLarge);
        }
        if bytes.len() < 4 {
            return Err(FormatError::Graph6LengthMismatch { expected: 4, found: bytes.len() });
        }
        let n = ((bytes[1] as u64 - 63) << 12)
            | ((bytes[2] as u64 - 63) << 6)
            | (bytes[3] as u64 - 63);
        (n as usize, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(FormatError::Graph6LengthMismatch { expected, found: rest.len() });
    }
    let bit = |i: usize| (rest[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0usize;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    // trailing padding must be zero
    for j in i..expected * 6 {
        if bit(j) {
            return Err(FormatError::Graph6BadPadding);
        }
    }
    Ok(Graph::new(n, edges).expect("indices in range by construction"))
}
