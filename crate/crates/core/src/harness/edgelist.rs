//! Plain-text edge lists.
//!
//! ```text
//! directed 0
//! # comment
//! A B 5
//! A C 7
//! node D
//! ```
//!
//! The header gives the graph kind. Each further line is either an edge
//! `source target weight` or an isolated node `node label`. Labels are
//! whitespace-free tokens; blank lines and `#` comments are skipped.

use std::fmt::Display;
use std::io::Write;
use std::str::FromStr;

use crate::edge::Edge;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn label<N: FromStr>(token: &str, line: usize) -> Result<N> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid node label {token:?}")))
}

pub fn parse_edge_list<N: NodeId + FromStr>(text: &str) -> Result<Graph<N>> {
    let mut graph: Option<Graph<N>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some(g) = graph.as_mut() else {
            let directed = match tokens.as_slice() {
                ["directed", "0"] => false,
                ["directed", "1"] => true,
                _ => return Err(parse_error(line, "expected header `directed 0` or `directed 1`")),
            };
            graph = Some(Graph::new(0, directed));
            continue;
        };
        match tokens.as_slice() {
            ["node", name] => g.add_node(label(name, line)?),
            [s, t, w] => {
                let weight: f64 = w
                    .parse()
                    .map_err(|_| parse_error(line, format!("invalid weight {w:?}")))?;
                if !weight.is_finite() {
                    return Err(parse_error(line, format!("weight {w:?} is not finite")));
                }
                g.add_edge(Edge::new(label(s, line)?, label(t, line)?, weight))?;
            }
            _ => {
                return Err(parse_error(
                    line,
                    "expected `source target weight` or `node label`",
                ))
            }
        }
    }
    graph.ok_or_else(|| parse_error(1, "missing `directed` header"))
}

/// Writes `g` with nodes and edges in ascending order.
pub fn write_edge_list<N, W>(g: &Graph<N>, out: &mut W) -> Result<()>
where
    N: NodeId + Display,
    W: Write,
{
    let io = |e: std::io::Error| Error::Io(e.to_string());
    writeln!(out, "directed {}", u8::from(g.is_directed())).map_err(io)?;
    let mut touched = std::collections::HashSet::new();
    let edges = g.sorted_edges();
    for e in &edges {
        touched.insert(&e.source);
        touched.insert(&e.target);
    }
    for node in g.sorted_nodes() {
        if !touched.contains(&node) {
            writeln!(out, "node {}", checked_label(&node)?).map_err(io)?;
        }
    }
    for e in &edges {
        writeln!(
            out,
            "{} {} {}",
            checked_label(&e.source)?,
            checked_label(&e.target)?,
            e.weight
        )
        .map_err(io)?;
    }
    Ok(())
}

pub fn to_edge_list_string<N: NodeId + Display>(g: &Graph<N>) -> Result<String> {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf)?;
    Ok(String::from_utf8(buf).expect("labels are Display output"))
}

fn checked_label<N: Display>(node: &N) -> Result<String> {
    let s = node.to_string();
    if s.is_empty() || s.contains(char::is_whitespace) || s.contains('#') {
        return Err(Error::Io(format!("node label {s:?} cannot be written as a token")));
    }
    Ok(s)
}
