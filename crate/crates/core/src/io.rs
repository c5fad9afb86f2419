//! Edge-list and DIMACS `.col` readers and writers.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` with 0-based
//! vertices. DIMACS: `c` comment lines, a `p edge n m` header and `e u v`
//! lines with 1-based vertices. Blank lines are ignored in both.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl GraphFormat {
    /// Guesses the format from a file extension, defaulting to edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col") | Some("dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| malformed(line, format!("invalid {what} `{tok}`")))
}

fn no_trailing<'a>(mut it: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match it.next() {
        Some(extra) => Err(malformed(line, format!("unexpected token `{extra}`"))),
        None => Ok(()),
    }
}

fn check_vertex(v: usize, n: usize, line: usize) -> Result<(), ParseError> {
    if v >= n {
        return Err(ParseError::Graph {
            line,
            source: crate::error::GraphError::VertexOutOfRange { vertex: v, n },
        });
    }
    Ok(())
}

fn check_edge(u: usize, v: usize, n: usize, line: usize) -> Result<(), ParseError> {
    check_vertex(u, n, line)?;
    check_vertex(v, n, line)?;
    if u == v {
        return Err(ParseError::Graph {
            line,
            source: crate::error::GraphError::SelfLoop(u),
        });
    }
    Ok(())
}

fn build(n: usize, edges: Vec<(usize, usize)>, header_line: usize) -> Result<Graph, ParseError> {
    Graph::new(n, edges).map_err(|source| ParseError::Graph {
        line: header_line,
        source,
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut toks = header.split_whitespace();
    let n = number(toks.next(), header_line, "vertex count")?;
    let m = number(toks.next(), header_line, "edge count")?;
    no_trailing(toks, header_line)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut toks = text.split_whitespace();
        let u = number(toks.next(), line, "vertex")?;
        let v = number(toks.next(), line, "vertex")?;
        no_trailing(toks, line)?;
        check_edge(u, v, n, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    build(n, edges, header_line)
}

/// DIMACS reader. The declared edge count is not enforced, since many
/// published instances list each edge in both directions.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(malformed(line, "duplicate `p` line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(malformed(
                            line,
                            format!("unsupported problem type {other:?}"),
                        ))
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                number(toks.next(), line, "edge count")?;
                no_trailing(toks, line)?;
                header = Some((n, line));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| malformed(line, "edge before `p` line"))?;
                let u = number(toks.next(), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                no_trailing(toks, line)?;
                if u == 0 || v == 0 {
                    return Err(malformed(line, "DIMACS vertices are 1-based"));
                }
                check_edge(u - 1, v - 1, n, line)?;
                edges.push((u - 1, v - 1));
            }
            Some(tag) => return Err(malformed(line, format!("unknown line type `{tag}`"))),
        }
    }
    let (n, header_line) = header.ok_or(ParseError::MissingHeader)?;
    build(n, edges, header_line)
}

pub fn parse_graph_str(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn parse_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph, ParseError> {
    parse_graph_str(&fs::read_to_string(path)?, format)
}

/// Canonical serialization: edges `u < v` in lexicographic order.
pub fn write_graph_string(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

pub fn write_graph(g: &Graph, format: GraphFormat, path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, write_graph_string(g, format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::GraphError;

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn dimacs_triangle() {
        let g = parse_dimacs("c tri\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
    }

    #[test]
    fn dimacs_out_of_range() {
        let err = parse_dimacs("p edge 3 3\ne 1 5\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { vertex: 4, n: 3 }
            }
        ));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(
            matches!(err, ParseError::Malformed { line: 3, .. }),
            "{err}"
        );
        let err = parse_edge_list("3 1\n\n1 1\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Graph {
                line: 3,
                source: GraphError::SelfLoop(1)
            }
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCount {
                declared: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_dimacs("e 1 2\n"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(ParseError::MissingHeader)
        ));
    }

    #[test]
    fn writes_both_formats() {
        let g = parse_edge_list("3 2\n1 0\n2 1").unwrap();
        assert_eq!(
            write_graph_string(&g, GraphFormat::EdgeList),
            "3 2\n0 1\n1 2\n"
        );
        assert_eq!(
            write_graph_string(&g, GraphFormat::Dimacs),
            "p edge 3 2\ne 1 2\ne 2 3\n"
        );
    }
}
