//! Edge-list and coloring text formats.
//!
//! Native edge list: optional header `p <n> <m>`, then one `u v` per line with
//! 0-based ids. `#` starts a comment; blank lines are ignored. Without a
//! header the vertex count is the largest id plus one.
//!
//! DIMACS variant: `c` and `#` comment lines, header `p <fmt> <n> <m>` or
//! `p <n> <m>`, edges `e u v` with 1-based ids.
//!
//! Colorings: one `u v c` per line, 0-based vertices, classes from 1.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeFormat {
    #[default]
    Native,
    Dimacs,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("malformed token {tok:?}")))
}

fn strip_comment(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_as(text, EdgeFormat::Native)
}

pub fn parse_edge_list_as(text: &str, format: EdgeFormat) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if format == EdgeFormat::Dimacs && toks[0] == "c" {
            continue;
        }
        if toks[0] == "p" {
            if header.is_some() || !edges.is_empty() {
                return Err(parse_err(line, "header must come before any edge"));
            }
            let nums = match (format, toks.len()) {
                (_, 3) => &toks[1..],
                (EdgeFormat::Dimacs, 4) => &toks[2..],
                _ => return Err(parse_err(line, "malformed header")),
            };
            header = Some((number(nums[0], line)?, number(nums[1], line)?, line));
            continue;
        }
        let ids = match format {
            EdgeFormat::Native if toks.len() == 2 => &toks[..],
            EdgeFormat::Dimacs if toks.len() == 3 && toks[0] == "e" => &toks[1..],
            _ => return Err(parse_err(line, format!("malformed edge line {body:?}"))),
        };
        let (mut u, mut v) = (number(ids[0], line)?, number(ids[1], line)?);
        if format == EdgeFormat::Dimacs {
            if u == 0 || v == 0 {
                return Err(parse_err(line, "vertex ids are 1-based"));
            }
            u -= 1;
            v -= 1;
        }
        if let Some((n, _, _)) = header {
            if u >= n || v >= n {
                return Err(parse_err(line, format!("vertex id {} out of range (n = {n})", u.max(v))));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line, format!("duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    let n = match header {
        Some((n, m, line)) => {
            if m != edges.len() {
                return Err(parse_err(line, format!("header declares {m} edges, found {}", edges.len())));
            }
            n
        }
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    Graph::from_edges(n, &edges)
}

/// Native format with a header line.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `u v c` lines into triples.
pub fn parse_coloring(text: &str) -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 3 {
            return Err(parse_err(line, format!("expected `u v class`, got {body:?}")));
        }
        out.push((number(toks[0], line)?, number(toks[1], line)?, number(toks[2], line)?));
    }
    Ok(out)
}

pub fn format_coloring(assignments: &[(usize, usize, usize)]) -> String {
    let mut out = String::with_capacity(assignments.len() * 12);
    for &(u, v, c) in assignments {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(r: Result<Graph>) -> (usize, String) {
        match r {
            Err(Error::Parse { line, message }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn path_without_header() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 2));
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn self_loop_line_two() {
        let (line, msg) = line_of(parse_edge_list("p 3 1\n0 0"));
        assert_eq!(line, 2);
        assert!(msg.contains("self-loop"));
    }

    #[test]
    fn duplicate_line_four() {
        let (line, msg) = line_of(parse_edge_list("# comment\n0 1\n\n0 1"));
        assert_eq!(line, 4);
        assert!(msg.contains("duplicate"));
        let (line, _) = line_of(parse_edge_list("0 1\n1 0"));
        assert_eq!(line, 2);
    }

    #[test]
    fn malformed_and_out_of_range() {
        assert_eq!(line_of(parse_edge_list("0 1\n1 x")).0, 2);
        assert_eq!(line_of(parse_edge_list("0 1 2")).0, 1);
        assert_eq!(line_of(parse_edge_list("p 2 1\n0 2")).0, 2);
        assert_eq!(line_of(parse_edge_list("p 3 2\n0 1")).0, 1);
        assert_eq!(line_of(parse_edge_list("0 1\np 3 1")).0, 2);
    }

    #[test]
    fn header_keeps_isolated_vertices() {
        let g = parse_edge_list("p 5 1\n0 1 # trailing comment\n").unwrap();
        assert_eq!(g.num_vertices(), 5);
        assert_eq!(parse_edge_list("").unwrap().num_vertices(), 0);
    }

    #[test]
    fn dimacs() {
        let text = "c example\np edge 3 2\ne 1 2\ne 2 3\n";
        let g = parse_edge_list_as(text, EdgeFormat::Dimacs).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(parse_edge_list_as("e 0 1", EdgeFormat::Dimacs).is_err());
        assert!(parse_edge_list_as("1 2", EdgeFormat::Dimacs).is_err());
    }

    #[test]
    fn round_trips() {
        let g = parse_edge_list("p 4 3\n0 1\n1 2\n2 3\n").unwrap();
        let again = parse_edge_list(&format_edge_list(&g)).unwrap();
        assert_eq!(again.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        let col = vec![(0, 1, 1), (1, 2, 2)];
        assert_eq!(parse_coloring(&format_coloring(&col)).unwrap(), col);
        assert!(parse_coloring("0 1").is_err());
    }
}
