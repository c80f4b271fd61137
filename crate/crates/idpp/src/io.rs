//! Line-oriented text formats for graphs, instances, solutions, reduction
//! maps, and verdicts.
//!
//! Serializers emit a fixed canonical byte layout (suitable for golden-file
//! comparison); parsers additionally accept `#` comment lines and blank
//! lines anywhere.
//!
//! Graph:        `g <node_count> <edge_count>` then one `e <u> <v>` per edge
//!               with `u < v`, sorted.
//! Instance:     graph lines followed by one `t <source> <sink>` per pair.
//! Solution:     one `r <pair_index> <v0> <v1> ... <vL>` per routed pair.
//! Gadget map:   one `map a <v> <a_v> <b_v>` per original node.
//! Midpoint map: one `map x <u> <v> <mid>` per original edge.
//! Verdict:      `feasible <0|1>` then one `violation <detail>` line each.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, IdppInstance, NodeId, TerminalPair};
use crate::reductions::{DppToIdppMap, IsToIdppMap};
use crate::verify::{IdppSolution, Path, Verdict};

/// Parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Content lines with their 1-based numbers; comments and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what}: {token:?}")))
}

struct InstanceLines {
    node_count: usize,
    declared_edges: usize,
    header_line: usize,
    edges: Vec<(NodeId, NodeId)>,
    pairs: Vec<TerminalPair>,
}

fn parse_instance_lines(text: &str, allow_pairs: bool) -> Result<InstanceLines, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen_edges = BTreeSet::new();
    let mut pairs = Vec::new();
    let mut last_line = 0;

    for (line, content) in content_lines(text) {
        last_line = line;
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        match tokens[0] {
            "g" => {
                if header.is_some() {
                    return Err(ParseError::new(line, "duplicate 'g' header line"));
                }
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "expected 'g <node_count> <edge_count>'"));
                }
                let n = parse_number(line, tokens[1], "node count")?;
                let m = parse_number(line, tokens[2], "edge count")?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(ParseError::new(line, "edge before 'g' header line"));
                };
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "expected 'e <u> <v>'"));
                }
                let u = parse_number(line, tokens[1], "node id")?;
                let v = parse_number(line, tokens[2], "node id")?;
                for node in [u, v] {
                    if node >= n {
                        return Err(ParseError::new(
                            line,
                            format!("node {node} out of range for a graph on {n} nodes"),
                        ));
                    }
                }
                if u == v {
                    return Err(ParseError::new(line, format!("self-loop at node {u}")));
                }
                if !seen_edges.insert((u.min(v), u.max(v))) {
                    return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
            "t" => {
                if !allow_pairs {
                    return Err(ParseError::new(
                        line,
                        "'t' pair line not allowed in a plain graph file",
                    ));
                }
                let Some((n, _, _)) = header else {
                    return Err(ParseError::new(line, "pair before 'g' header line"));
                };
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "expected 't <source> <sink>'"));
                }
                let s = parse_number(line, tokens[1], "node id")?;
                let t = parse_number(line, tokens[2], "node id")?;
                for node in [s, t] {
                    if node >= n {
                        return Err(ParseError::new(
                            line,
                            format!("terminal {node} out of range for a graph on {n} nodes"),
                        ));
                    }
                }
                if s == t {
                    return Err(ParseError::new(
                        line,
                        format!("source and sink are both node {s}"),
                    ));
                }
                pairs.push(TerminalPair::new(s, t));
            }
            other => {
                return Err(ParseError::new(
                    line,
                    format!("unrecognized line kind {other:?}"),
                ));
            }
        }
    }

    let Some((node_count, declared_edges, header_line)) = header else {
        return Err(ParseError::new(last_line + 1, "missing 'g' header line"));
    };
    if edges.len() != declared_edges {
        return Err(ParseError::new(
            header_line,
            format!(
                "header declares {declared_edges} edges but {} were given",
                edges.len()
            ),
        ));
    }
    Ok(InstanceLines {
        node_count,
        declared_edges,
        header_line,
        edges,
        pairs,
    })
}

/// Parses a plain graph file (no pair lines).
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let lines = parse_instance_lines(text, false)?;
    let _ = lines.declared_edges;
    Graph::new(lines.node_count, &lines.edges)
        .map_err(|e| ParseError::new(lines.header_line, e.to_string()))
}

/// Parses a graph plus terminal pairs. A file with no `t` lines is an
/// instance with zero pairs.
pub fn parse_instance(text: &str) -> Result<IdppInstance, ParseError> {
    let lines = parse_instance_lines(text, true)?;
    let graph = Graph::new(lines.node_count, &lines.edges)
        .map_err(|e| ParseError::new(lines.header_line, e.to_string()))?;
    IdppInstance::new(graph, lines.pairs)
        .map_err(|e| ParseError::new(lines.header_line, e.to_string()))
}

/// Parses a solution file: one `r` line per routed pair. Node ids are not
/// range-checked here; the verifier reports them as violations.
pub fn parse_solution(text: &str) -> Result<IdppSolution, ParseError> {
    let mut routed = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        if tokens[0] != "r" {
            return Err(ParseError::new(
                line,
                format!("unrecognized line kind {:?}", tokens[0]),
            ));
        }
        if tokens.len() < 3 {
            return Err(ParseError::new(
                line,
                "expected 'r <pair_index> <v0> ... <vL>' with at least one node",
            ));
        }
        let pair_index = parse_number(line, tokens[1], "pair index")?;
        let nodes = tokens[2..]
            .iter()
            .map(|t| parse_number(line, t, "node id"))
            .collect::<Result<Vec<_>, _>>()?;
        routed.push((pair_index, Path::new(nodes)));
    }
    Ok(IdppSolution { routed })
}

/// Parses a pendant-gadget map: `map a <v> <a_v> <b_v>` lines, with `v`
/// running 0, 1, 2, ... in order.
pub fn parse_is_map(text: &str) -> Result<IsToIdppMap, ParseError> {
    let mut entries: Vec<(usize, NodeId, NodeId)> = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        if tokens.len() != 5 || tokens[0] != "map" || tokens[1] != "a" {
            return Err(ParseError::new(line, "expected 'map a <v> <a_v> <b_v>'"));
        }
        let v = parse_number(line, tokens[2], "node id")?;
        if v != entries.len() {
            return Err(ParseError::new(
                line,
                format!("expected entry for node {}, got {v}", entries.len()),
            ));
        }
        let a = parse_number(line, tokens[3], "node id")?;
        let b = parse_number(line, tokens[4], "node id")?;
        entries.push((line, a, b));
    }

    let original = entries.len();
    let mut used = BTreeSet::new();
    for &(line, a, b) in &entries {
        for id in [a, b] {
            if id < original {
                return Err(ParseError::new(
                    line,
                    format!("gadget id {id} collides with an original node"),
                ));
            }
            if !used.insert(id) {
                return Err(ParseError::new(line, format!("gadget id {id} repeated")));
            }
        }
    }
    Ok(IsToIdppMap {
        terminals: entries.into_iter().map(|(_, a, b)| (a, b)).collect(),
    })
}

/// Parses an edge-subdivision map: `map x <u> <v> <mid>` lines.
pub fn parse_dpp_map(text: &str) -> Result<DppToIdppMap, ParseError> {
    let mut entries = Vec::new();
    let mut seen_edges = BTreeSet::new();
    let mut seen_mids = BTreeSet::new();
    let mut originals = BTreeSet::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();
        if tokens.len() != 5 || tokens[0] != "map" || tokens[1] != "x" {
            return Err(ParseError::new(line, "expected 'map x <u> <v> <mid>'"));
        }
        let u = parse_number(line, tokens[2], "node id")?;
        let v = parse_number(line, tokens[3], "node id")?;
        let mid = parse_number(line, tokens[4], "node id")?;
        if u == v {
            return Err(ParseError::new(line, format!("self-loop at node {u}")));
        }
        if !seen_edges.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
        }
        if !seen_mids.insert(mid) {
            return Err(ParseError::new(line, format!("midpoint {mid} repeated")));
        }
        originals.insert(u);
        originals.insert(v);
        entries.push(((u.min(v), u.max(v)), mid));
    }
    for &(_, mid) in &entries {
        if originals.contains(&mid) {
            // The offending line is not tracked past this point; report the
            // id itself, which names the conflict unambiguously.
            return Err(ParseError::new(
                1,
                format!("midpoint {mid} collides with an original node"),
            ));
        }
    }
    Ok(DppToIdppMap::from_edges(entries))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "g {} {}", g.node_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn serialize_instance(inst: &IdppInstance) -> String {
    let mut out = serialize_graph(inst.graph());
    for pair in inst.pairs() {
        let _ = writeln!(out, "t {} {}", pair.source, pair.sink);
    }
    out
}

pub fn serialize_solution(sol: &IdppSolution) -> String {
    let mut out = String::new();
    for (pair_index, path) in &sol.routed {
        let _ = write!(out, "r {pair_index}");
        for v in &path.nodes {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn serialize_is_map(map: &IsToIdppMap) -> String {
    let mut out = String::new();
    for (v, a, b) in map.entries() {
        let _ = writeln!(out, "map a {v} {a} {b}");
    }
    out
}

pub fn serialize_dpp_map(map: &DppToIdppMap) -> String {
    let mut out = String::new();
    for ((u, v), mid) in map.entries() {
        let _ = writeln!(out, "map x {u} {v} {mid}");
    }
    out
}

pub fn serialize_verdict(verdict: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "feasible {}", u8::from(verdict.feasible()));
    for violation in verdict.violations() {
        let _ = writeln!(out, "violation {violation}");
    }
    out
}
