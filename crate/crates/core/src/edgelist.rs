//! Plain-text edge-list format.
//!
//! A record is a header line holding the order `n`, followed by `n - 1`
//! lines `u v` (whitespace-separated vertex ids). Output always writes
//! `u < v` with edges in lexicographic order and LF line endings; input
//! accepts either endpoint order. A stream holds several records separated
//! by blank lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::StructureError;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number in the input.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("expected the vertex count, found {0:?}")]
    BadHeader(String),
    #[error("expected two vertex ids `u v`, found {0:?}")]
    BadEdge(String),
    #[error("expected {expected} edge lines, found {found}")]
    MissingEdges { expected: usize, found: usize },
    #[error("unexpected content after the last edge: {0:?}")]
    TrailingContent(String),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} closes a cycle")]
    Cycle(usize, usize),
    #[error("{0}")]
    Structure(StructureError),
}

/// Parses exactly one record. Trailing blank lines are allowed.
pub fn parse_edge_list(input: &str) -> Result<Tree, ParseError> {
    let lines: Vec<&str> = input.lines().collect();
    let start = lines
        .iter()
        .position(|l| !l.trim().is_empty())
        .ok_or(ParseError {
            line: 1,
            kind: ParseErrorKind::Empty,
        })?;
    let (tree, next) = parse_record(&lines, start)?;
    if let Some(extra) = (next..lines.len()).find(|&i| !lines[i].trim().is_empty()) {
        return Err(ParseError {
            line: extra + 1,
            kind: ParseErrorKind::TrailingContent(lines[extra].to_string()),
        });
    }
    Ok(tree)
}

/// Parses a stream of records separated by blank lines. An input with no
/// non-blank lines is an empty stream.
pub fn parse_edge_lists(input: &str) -> Result<Vec<Tree>, ParseError> {
    let lines: Vec<&str> = input.lines().collect();
    let mut trees = Vec::new();
    let mut at = 0;
    loop {
        while at < lines.len() && lines[at].trim().is_empty() {
            at += 1;
        }
        if at == lines.len() {
            return Ok(trees);
        }
        let (tree, next) = parse_record(&lines, at)?;
        if next < lines.len() && !lines[next].trim().is_empty() {
            return Err(ParseError {
                line: next + 1,
                kind: ParseErrorKind::TrailingContent(lines[next].to_string()),
            });
        }
        trees.push(tree);
        at = next;
    }
}

/// Parses the record whose header sits at `lines[start]`; returns the tree
/// and the index of the first line after it.
fn parse_record(lines: &[&str], start: usize) -> Result<(Tree, usize), ParseError> {
    let header = lines[start];
    let order: usize = header.trim().parse().map_err(|_| ParseError {
        line: start + 1,
        kind: ParseErrorKind::BadHeader(header.to_string()),
    })?;
    if order == 0 {
        return Err(ParseError {
            line: start + 1,
            kind: ParseErrorKind::Structure(StructureError::Empty),
        });
    }

    let expected = order - 1;
    let mut edges = Vec::new();
    let mut at = start + 1;
    while edges.len() < expected {
        let Some(&line) = lines.get(at).filter(|l| !l.trim().is_empty()) else {
            return Err(ParseError {
                line: at + 1,
                kind: ParseErrorKind::MissingEdges {
                    expected,
                    found: edges.len(),
                },
            });
        };
        edges.push(parse_edge(line).ok_or_else(|| ParseError {
            line: at + 1,
            kind: ParseErrorKind::BadEdge(line.to_string()),
        })?);
        at += 1;
    }

    let tree = Tree::from_edges(order, &edges).map_err(|err| {
        let line = err.edge().map_or(at, |edge| start + 2 + edge);
        let kind = match err {
            StructureError::VertexOutOfRange { vertex, order, .. } => {
                ParseErrorKind::VertexOutOfRange { vertex, order }
            }
            StructureError::SelfLoop { vertex, .. } => ParseErrorKind::SelfLoop(vertex),
            StructureError::DuplicateEdge { u, v, .. } => ParseErrorKind::DuplicateEdge(u, v),
            StructureError::Cycle { u, v, .. } => ParseErrorKind::Cycle(u, v),
            other => ParseErrorKind::Structure(other),
        };
        ParseError { line, kind }
    })?;
    Ok((tree, at))
}

fn parse_edge(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let u = fields.next()?.parse().ok()?;
    let v = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((u, v))
}

/// Serializes one record: header, then `u v` lines with `u < v`, each
/// LF-terminated.
pub fn write_edge_list(tree: &Tree) -> String {
    let mut out = String::new();
    writeln!(out, "{}", tree.order()).unwrap();
    for (u, v) in tree.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Serializes a stream of records separated by one blank line.
pub fn write_edge_lists<'a>(trees: impl IntoIterator<Item = &'a Tree>) -> String {
    let mut out = String::new();
    for (i, tree) in trees.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&write_edge_list(tree));
    }
    out
}
