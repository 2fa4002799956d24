//! Graph files: graph6 (one graph per line) and edge lists.

use std::fmt;
use std::str::FromStr;

use p5free_core::{graph6, Graph};
use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Graph6,
    EdgeList,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            _ => Err(format!("unknown format `{s}` (expected graph6 or edgelist)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {err}")]
    Graph6 { line: usize, err: graph6::Graph6Error },
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("input contains no graph")]
    NoGraph,
    #[error("input is not UTF-8 text")]
    NotText,
}

/// Parses every graph in `bytes`. graph6 input holds one graph per
/// non-blank line; edge-list input holds exactly one graph.
pub fn parse_graphs(bytes: &[u8], format: Format) -> Result<Vec<Graph>, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotText)?;
    let graphs = match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| graph6::decode(l).map_err(|err| ParseError::Graph6 { line: i + 1, err }))
            .collect::<Result<Vec<_>, _>>()?,
        Format::EdgeList => vec![parse_edge_list(text)?],
    };
    if graphs.is_empty() {
        return Err(ParseError::NoGraph);
    }
    Ok(graphs)
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, msg: String| ParseError::EdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::NoGraph)?;
    let nums = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(err(line, format!("expected two integers, found `{l}`")));
        }
        let p = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("`{s}` is not a non-negative integer")));
        Ok((p(parts[0])?, p(parts[1])?))
    };
    let (n, m) = nums(hline, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = nums(line, l)?;
        if seen == m {
            return Err(err(line, format!("more than the {m} edges announced in the header")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(err(line, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if g.has_edge(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(err(hline, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

/// The graph in `format`, newline-terminated.
pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", graph6::encode(g)),
        Format::EdgeList => {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let mut out = format!("{} {}\n", g.n(), edges.len());
            for (u, v) in edges {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    }
}
