//! Text formats: edge lists, graph6, hyperedge lists, labelings and DOT.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Hypergraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn numbers(line: usize, l: &str) -> Result<Vec<usize>, IoError> {
    l.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

/// Edge list: first line `n m`, then `m` lines `u v` (0-indexed).
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let h = numbers(hl, header)?;
    let [n, m] = h[..] else {
        return Err(parse_err(hl, "header must be `n m`"));
    };
    let mut seen = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let nums = numbers(ln, l)?;
        let [u, v] = nums[..] else {
            return Err(parse_err(ln, "edge line must be `u v`"));
        };
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(ln, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            hl,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(s: &str) -> Result<Graph, IoError> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(IoError::Graph6("byte outside 63..=126".into()));
    }
    let six = |bs: &[u8]| {
        bs.iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    let (n, rest) = match bytes {
        [] => return Err(IoError::Graph6("empty string".into())),
        [126, 126, tail @ ..] if tail.len() >= 6 => (six(&tail[..6]), &tail[6..]),
        [126, tail @ ..] if tail.len() >= 3 && tail[0] != 126 => (six(&tail[..3]), &tail[3..]),
        [126, ..] => return Err(IoError::Graph6("truncated size field".into())),
        [b, tail @ ..] => ((b - 63) as usize, tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(IoError::Graph6(format!(
            "expected {} data bytes for n = {n}, got {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push6 = |out: &mut Vec<u8>, v: usize, k: usize| {
        for i in (0..k).rev() {
            out.push(((v >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push6(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push6(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// One graph6 string per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, IoError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| parse_err(i + 1, e.to_string())))
        .collect()
}

/// Hyperedge list: one edge per line as space-separated vertex ids. The
/// vertex count is one more than the largest id, or `n <count>` on the
/// first line.
pub fn parse_hyperedges(text: &str) -> Result<Hypergraph, IoError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut max = None;
    for (ln, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix('n') {
            if n.is_some() || !edges.is_empty() {
                return Err(parse_err(ln, "`n <count>` must be the first line"));
            }
            let v = numbers(ln, rest)?;
            let [count] = v[..] else {
                return Err(parse_err(ln, "expected `n <count>`"));
            };
            n = Some(count);
            continue;
        }
        let e = numbers(ln, l)?;
        if let Some(limit) = n {
            if let Some(&v) = e.iter().find(|&&v| v >= limit) {
                return Err(parse_err(ln, format!("vertex {v} out of range 0..{limit}")));
            }
        }
        max = e.iter().copied().chain(max).max();
        edges.push(e);
    }
    let n = n.unwrap_or(max.map_or(0, |m| m + 1));
    Ok(Hypergraph::new(n, edges)?)
}

/// Labeling file: the target vertex of source vertex `i` is the `i`-th
/// integer (whitespace or newline separated).
pub fn parse_labeling(text: &str) -> Result<Vec<Vertex>, IoError> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text) {
        out.extend(numbers(ln, l)?);
    }
    Ok(out)
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(
            s,
            "  {v} [label=\"{}\"];",
            g.name(v).replace('\\', "\\\\").replace('"', "\\\"")
        );
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
