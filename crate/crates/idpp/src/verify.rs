//! Feasibility checks: chordless paths, mutual remoteness, and full solution
//! verdicts with per-defect diagnostics.

use std::fmt;

use crate::graph::{Graph, IdppInstance, NodeId};

/// A candidate connection: an ordered node sequence.
///
/// The type itself carries no graph, so nothing is validated here; the
/// operations in this module decide whether the sequence is an actual path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub nodes: Vec<NodeId>,
}

impl Path {
    pub fn new(nodes: Vec<NodeId>) -> Self {
        Path { nodes }
    }
}

/// A selection of pair indices, each with one routed path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdppSolution {
    pub routed: Vec<(usize, Path)>,
}

impl IdppSolution {
    pub fn empty() -> Self {
        IdppSolution::default()
    }

    /// Number of routed pairs, the objective value.
    pub fn size(&self) -> usize {
        self.routed.len()
    }
}

/// What is wrong with a single routed node sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathDefect {
    Empty,
    NodeOutOfRange(NodeId),
    RepeatedNode(NodeId),
    MissingEdge(NodeId, NodeId),
}

impl fmt::Display for PathDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathDefect::Empty => write!(f, "empty path"),
            PathDefect::NodeOutOfRange(v) => write!(f, "node {v} out of range"),
            PathDefect::RepeatedNode(v) => write!(f, "repeated node {v}"),
            PathDefect::MissingEdge(u, v) => write!(f, "missing edge {u}-{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BadIndexReason {
    OutOfRange,
    Duplicate,
}

/// One verification failure. The derived ordering (variant first, then
/// fields) is the order violations are reported in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    NotAPath {
        pair_index: usize,
        defect: PathDefect,
    },
    Chord {
        pair_index: usize,
        u: NodeId,
        v: NodeId,
    },
    SharedNode {
        pair_a: usize,
        pair_b: usize,
        node: NodeId,
    },
    AdjacentPaths {
        pair_a: usize,
        pair_b: usize,
        u: NodeId,
        v: NodeId,
    },
    EndpointMismatch {
        pair_index: usize,
        expected_source: NodeId,
        expected_sink: NodeId,
        got_first: NodeId,
        got_last: NodeId,
    },
    BadIndex {
        position: usize,
        pair_index: usize,
        reason: BadIndexReason,
    },
}

/// Violation kind, for callers that dispatch without caring about details.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    NotAPath,
    Chord,
    SharedNode,
    AdjacentPaths,
    EndpointMismatch,
    BadIndex,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ViolationKind::NotAPath => "NOT_A_PATH",
            ViolationKind::Chord => "CHORD",
            ViolationKind::SharedNode => "SHARED_NODE",
            ViolationKind::AdjacentPaths => "ADJACENT_PATHS",
            ViolationKind::EndpointMismatch => "ENDPOINT_MISMATCH",
            ViolationKind::BadIndex => "BAD_INDEX",
        }
    }
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::NotAPath { .. } => ViolationKind::NotAPath,
            Violation::Chord { .. } => ViolationKind::Chord,
            Violation::SharedNode { .. } => ViolationKind::SharedNode,
            Violation::AdjacentPaths { .. } => ViolationKind::AdjacentPaths,
            Violation::EndpointMismatch { .. } => ViolationKind::EndpointMismatch,
            Violation::BadIndex { .. } => ViolationKind::BadIndex,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotAPath { pair_index, defect } => {
                write!(f, "NOT_A_PATH pair={pair_index} {defect}")
            }
            Violation::Chord { pair_index, u, v } => {
                write!(f, "CHORD pair={pair_index} chord {u}-{v}")
            }
            Violation::SharedNode {
                pair_a,
                pair_b,
                node,
            } => write!(f, "SHARED_NODE pairs={pair_a},{pair_b} node {node}"),
            Violation::AdjacentPaths {
                pair_a,
                pair_b,
                u,
                v,
            } => write!(f, "ADJACENT_PATHS pairs={pair_a},{pair_b} edge {u}-{v}"),
            Violation::EndpointMismatch {
                pair_index,
                expected_source,
                expected_sink,
                got_first,
                got_last,
            } => write!(
                f,
                "ENDPOINT_MISMATCH pair={pair_index} expected {expected_source}->{expected_sink} got {got_first}->{got_last}"
            ),
            Violation::BadIndex {
                position,
                pair_index,
                reason,
            } => {
                let why = match reason {
                    BadIndexReason::OutOfRange => "out of range",
                    BadIndexReason::Duplicate => "duplicate",
                };
                write!(f, "BAD_INDEX entry={position} pair={pair_index} {why}")
            }
        }
    }
}

/// Result of verifying a solution. Feasible exactly when no violation was
/// found; the violation list is sorted for deterministic output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    violations: Vec<Violation>,
}

impl Verdict {
    pub fn feasible(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_kind(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

/// True iff `p` is a simple path in `g` with no chord, i.e. no edge of `g`
/// joins two non-consecutive nodes of `p`.
///
/// A single node counts as a path, as does a single edge. The empty sequence
/// is not a path. Panics if any node id is out of range.
pub fn is_induced_path(g: &Graph, p: &Path) -> bool {
    let nodes = &p.nodes;
    if nodes.is_empty() {
        return false;
    }
    let mut seen = vec![false; g.node_count()];
    for &v in nodes {
        assert!(
            v < g.node_count(),
            "node {v} out of range for a graph on {} nodes",
            g.node_count()
        );
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    for w in nodes.windows(2) {
        if !g.adjacent(w[0], w[1]) {
            return false;
        }
    }
    for i in 0..nodes.len() {
        for j in (i + 2)..nodes.len() {
            if g.adjacent(nodes[i], nodes[j]) {
                return false;
            }
        }
    }
    true
}

/// True iff the two node sequences share no node and no edge of `g` joins a
/// node of one to a node of the other. Symmetric in its path arguments.
/// Panics if any node id is out of range.
pub fn mutually_remote(g: &Graph, p1: &Path, p2: &Path) -> bool {
    for &u in &p1.nodes {
        for &v in &p2.nodes {
            if u == v || g.adjacent(u, v) {
                return false;
            }
        }
    }
    true
}

/// Checks a candidate solution against an instance and reports every failure
/// found. Total: malformed input produces violations, never panics.
///
/// An entry with a bad pair index is excluded from all further checks; a path
/// containing an out-of-range node is excluded from adjacency-based checks
/// but still gets its endpoint and repetition defects reported.
pub fn verify_idpp_solution(inst: &IdppInstance, sol: &IdppSolution) -> Verdict {
    let g = inst.graph();
    let n = g.node_count();
    let k = inst.pair_count();
    let mut violations = Vec::new();

    // Pass 1: pair indices.
    let mut index_used = vec![false; k];
    let mut entry_ok = vec![false; sol.routed.len()];
    for (pos, (pair_index, _)) in sol.routed.iter().enumerate() {
        if *pair_index >= k {
            violations.push(Violation::BadIndex {
                position: pos,
                pair_index: *pair_index,
                reason: BadIndexReason::OutOfRange,
            });
        } else if index_used[*pair_index] {
            violations.push(Violation::BadIndex {
                position: pos,
                pair_index: *pair_index,
                reason: BadIndexReason::Duplicate,
            });
        } else {
            index_used[*pair_index] = true;
            entry_ok[pos] = true;
        }
    }

    // Pass 2: each routed path on its own.
    let mut nodes_in_range = vec![false; sol.routed.len()];
    for (pos, (pair_index, path)) in sol.routed.iter().enumerate() {
        if !entry_ok[pos] {
            continue;
        }
        let nodes = &path.nodes;
        if nodes.is_empty() {
            violations.push(Violation::NotAPath {
                pair_index: *pair_index,
                defect: PathDefect::Empty,
            });
            continue;
        }

        let pair = inst.pairs()[*pair_index];
        let (first, last) = (nodes[0], nodes[nodes.len() - 1]);
        if first != pair.source || last != pair.sink {
            violations.push(Violation::EndpointMismatch {
                pair_index: *pair_index,
                expected_source: pair.source,
                expected_sink: pair.sink,
                got_first: first,
                got_last: last,
            });
        }

        if let Some(&bad) = nodes.iter().find(|&&v| v >= n) {
            violations.push(Violation::NotAPath {
                pair_index: *pair_index,
                defect: PathDefect::NodeOutOfRange(bad),
            });
            continue;
        }
        nodes_in_range[pos] = true;

        let mut seen = vec![false; n];
        let mut simple = true;
        for &v in nodes {
            if seen[v] {
                violations.push(Violation::NotAPath {
                    pair_index: *pair_index,
                    defect: PathDefect::RepeatedNode(v),
                });
                simple = false;
                break;
            }
            seen[v] = true;
        }
        for w in nodes.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                violations.push(Violation::NotAPath {
                    pair_index: *pair_index,
                    defect: PathDefect::MissingEdge(w[0], w[1]),
                });
                simple = false;
                break;
            }
        }
        if simple {
            for i in 0..nodes.len() {
                for j in (i + 2)..nodes.len() {
                    if g.adjacent(nodes[i], nodes[j]) {
                        let (u, v) = (nodes[i].min(nodes[j]), nodes[i].max(nodes[j]));
                        violations.push(Violation::Chord {
                            pair_index: *pair_index,
                            u,
                            v,
                        });
                    }
                }
            }
        }
    }

    // Pass 3: every unordered pair of routed paths.
    for a in 0..sol.routed.len() {
        for b in (a + 1)..sol.routed.len() {
            if !(entry_ok[a] && nodes_in_range[a] && entry_ok[b] && nodes_in_range[b]) {
                continue;
            }
            let (idx_a, path_a) = &sol.routed[a];
            let (idx_b, path_b) = &sol.routed[b];
            let (pair_a, pair_b) = (*idx_a.min(idx_b), *idx_a.max(idx_b));
            for &u in &path_a.nodes {
                for &v in &path_b.nodes {
                    if u == v {
                        violations.push(Violation::SharedNode {
                            pair_a,
                            pair_b,
                            node: u,
                        });
                    } else if g.adjacent(u, v) {
                        violations.push(Violation::AdjacentPaths {
                            pair_a,
                            pair_b,
                            u,
                            v,
                        });
                    }
                }
            }
        }
    }

    violations.sort();
    violations.dedup();
    Verdict { violations }
}
