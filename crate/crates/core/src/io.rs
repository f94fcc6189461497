//! Text formats, 1-based on the wire.
//!
//! Graphs: a `p edge <n> <m>` header, then `m` lines `e <u> <v>`; lines
//! starting with `c` are comments.
//!
//! Hypergraphs: an optional `p hg <n> <m>` header, then one edge per line as
//! whitespace-separated vertex indices; `#` starts a comment. With a header,
//! blank lines are empty edges until `m` edges have been read; without one,
//! blank lines are skipped and `n` is the largest index seen.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_error(line, column, format!("expected a non-negative integer, found `{tok}`")))
}

fn vertex(line: usize, tok: (usize, &str)) -> Result<usize> {
    match number(line, tok)? {
        0 => Err(parse_error(line, tok.0, "vertex indices start at 1")),
        v => Ok(v),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(&(col, first)) = toks.first() else {
            continue;
        };
        match first {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_error(line, col, "duplicate header"));
                }
                if toks.len() != 4 || toks[1].1 != "edge" {
                    return Err(parse_error(line, col, "expected `p edge <n> <m>`"));
                }
                let n = number(line, toks[2])?;
                let m = number(line, toks[3])?;
                header = Some((n, m));
                graph = Some(Graph::new(n));
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(parse_error(line, col, "expected `e <u> <v>`"));
                }
                let u = vertex(line, toks[1])?;
                let v = vertex(line, toks[2])?;
                if u == v {
                    return Err(parse_error(line, toks[2].0, format!("self-loop on vertex {u}")));
                }
                let Some(g) = graph.as_mut() else {
                    return Err(parse_error(line, col, "edge before the `p edge` header"));
                };
                let n = g.n();
                for (x, tok) in [(u, toks[1]), (v, toks[2])] {
                    if x > n {
                        return Err(parse_error(line, tok.0, format!("vertex {x} exceeds n = {n}")));
                    }
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_error(line, col, format!("duplicate edge {u} {v}")));
                }
                g.connect(u - 1, v - 1);
            }
            other => return Err(parse_error(line, col, format!("unknown line type `{other}`"))),
        }
    }
    let Some((_, m)) = header else {
        return Err(parse_error(last_line.max(1), 1, "missing `p edge` header"));
    };
    if seen.len() != m {
        return Err(parse_error(
            last_line.max(1),
            1,
            format!("header announces {m} edges, found {}", seen.len()),
        ));
    }
    Ok(graph.unwrap())
}

pub fn write_graph(g: &Graph) -> String {
    write_graph_with_comments(g, &[])
}

/// Comment lines go right after the header.
pub fn write_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut max_vertex = 0;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap();
        let toks = tokens(content);
        let is_comment = raw.trim_start().starts_with('#');
        if toks.is_empty() {
            let expecting = header.is_some_and(|(_, m)| edges.len() < m);
            if expecting && !is_comment {
                edges.push(VertexSet::new());
            }
            continue;
        }
        if toks[0].1 == "p" {
            if header.is_some() || !edges.is_empty() {
                return Err(parse_error(line, toks[0].0, "header must come first"));
            }
            if toks.len() != 4 || toks[1].1 != "hg" {
                return Err(parse_error(line, toks[0].0, "expected `p hg <n> <m>`"));
            }
            header = Some((number(line, toks[2])?, number(line, toks[3])?));
            continue;
        }
        let mut edge = VertexSet::new();
        for &tok in &toks {
            let v = vertex(line, tok)?;
            if let Some((n, _)) = header {
                if v > n {
                    return Err(parse_error(line, tok.0, format!("vertex {v} exceeds n = {n}")));
                }
            }
            if !edge.insert(v - 1) {
                return Err(parse_error(line, tok.0, format!("vertex {v} repeated in edge")));
            }
            max_vertex = max_vertex.max(v);
        }
        if header.is_some_and(|(_, m)| edges.len() == m) {
            return Err(parse_error(line, toks[0].0, "more edges than the header announces"));
        }
        edges.push(edge);
    }
    let n = match header {
        Some((n, m)) => {
            if edges.len() != m {
                return Err(parse_error(
                    last_line.max(1),
                    1,
                    format!("header announces {m} edges, found {}", edges.len()),
                ));
            }
            n
        }
        None => max_vertex,
    };
    Ok(Hypergraph::new(n, edges))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("p hg {} {}\n", h.n(), h.m());
    for e in h.edges() {
        out.push_str(&e.to_one_based_string());
        out.push('\n');
    }
    out
}

/// A comma- or space-separated list of 1-based vertices, e.g. `1,3,5`.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet> {
    let mut s = VertexSet::new();
    let mut column = 1;
    for part in text.split([',', ' ']) {
        if !part.is_empty() {
            s.insert(vertex(1, (column, part))? - 1);
        }
        column += part.len() + 1;
    }
    Ok(s)
}
