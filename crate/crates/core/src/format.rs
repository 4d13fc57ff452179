//! Text interchange formats: graph6 and a plain edge list.

use std::fmt::Write as _;

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order expressible with the single-byte graph6 size field.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes a graph6 string into a graph on `0..n`.
///
/// Only the short form is accepted (`n <= 62`). The optional `>>graph6<<`
/// header is not recognised; strip it before calling.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(g6_err(0, "empty input"));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }
    if head == 126 {
        return Err(g6_err(0, "multi-byte size field (n > 62) is not supported"));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nchars {
        return Err(g6_err(
            bytes.len(),
            format!("expected {} data bytes for n = {n}, found {}", nchars, body.len()),
        ));
    }
    if body.len() > nchars {
        return Err(g6_err(1 + nchars, "trailing bytes after graph data"));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (0b100000 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[nchars - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(nchars, "non-zero padding bits"));
        }
    }
    Ok(Graph::from_parts((0..n as Vertex).collect(), adj))
}

/// Encodes `g` in graph6 after relabeling its vertices to `0..n` in label
/// order.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::too_large("graph6", GRAPH6_MAX_ORDER, n));
    }
    let adj = g.adj();
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for row in &adj[..j] {
            acc <<= 1;
            if row & bit(j) != 0 {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with labels in `0..n`. Blank lines and `#` comments are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(line, format!("expected two integers, found {:?}", l)));
        }
        let a = fields[0]
            .parse()
            .map_err(|_| err(line, format!("not a non-negative integer: {:?}", fields[0])))?;
        let b = fields[1]
            .parse()
            .map_err(|_| err(line, format!("not a non-negative integer: {:?}", fields[1])))?;
        Ok((a, b))
    };

    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header line".into()))?;
    let (n, m) = parse_pair(hline, header)?;
    if n > crate::graph::MAX_ORDER {
        return Err(Error::too_large("edge list", crate::graph::MAX_ORDER, n));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref() {
        if edges.len() == m {
            return Err(err(line, "more edge lines than announced".into()));
        }
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("loop at {u}")));
        }
        edges.push((u as Vertex, v as Vertex));
    }
    if edges.len() != m {
        return Err(err(hline, format!("announced {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

/// Writes `g` (relabeled to `0..n`) in edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let g = g.normalized();
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
