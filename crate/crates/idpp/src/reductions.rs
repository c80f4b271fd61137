//! Instance transformations: the pendant-pair gadget that turns an
//! independent-set instance into an induced-disjoint-paths instance, the
//! edge-subdivision that turns a node-disjoint-paths instance into one, and
//! solution lift/project mappings across both boundaries.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Graph, IdppInstance, NodeId, TerminalPair};
use crate::verify::{IdppSolution, Path};

/// A node-disjoint-paths instance has the same shape as an induced one; the
/// two differ only in which solver and feasibility notion apply.
pub type DppInstance = IdppInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("node {node} is not an original node (the original graph has {original_count})")]
    NotAnOriginalNode { node: NodeId, original_count: usize },
    #[error("pair index {pair_index} does not correspond to an original node")]
    UnknownPair { pair_index: usize },
    #[error("routed entry for pair {pair_index} is not its pendant gadget path")]
    NotAGadgetPath { pair_index: usize },
    #[error("consecutive nodes {u} and {v} are not an edge of the original graph")]
    UnknownEdge { u: NodeId, v: NodeId },
    #[error("path for pair {pair_index} does not start and end at original nodes")]
    NotASubdividedPath { pair_index: usize },
}

/// Bookkeeping for the pendant-pair gadget: per original node `v`, the ids
/// `(a_v, b_v)` of the terminal pair attached to it.
///
/// The layout is fixed: original nodes keep ids `0..n`, and node `v` gets
/// `a_v = n + 2v`, `b_v = n + 2v + 1`, so reduced instances serialize
/// identically across runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsToIdppMap {
    pub(crate) terminals: Vec<(NodeId, NodeId)>,
}

impl IsToIdppMap {
    /// Number of nodes in the original graph.
    pub fn original_nodes(&self) -> usize {
        self.terminals.len()
    }

    /// Terminal pair attached to original node `v`, if `v` is original.
    pub fn terminals(&self, v: NodeId) -> Option<(NodeId, NodeId)> {
        self.terminals.get(v).copied()
    }

    /// All `(v, a_v, b_v)` entries in node order.
    pub fn entries(&self) -> impl Iterator<Item = (NodeId, NodeId, NodeId)> + '_ {
        self.terminals
            .iter()
            .enumerate()
            .map(|(v, &(a, b))| (v, a, b))
    }
}

/// Bookkeeping for edge subdivision: per original edge `(u, v)` with `u < v`,
/// the id of the fresh midpoint node placed on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DppToIdppMap {
    pub(crate) midpoint_of: BTreeMap<(NodeId, NodeId), NodeId>,
    pub(crate) midpoints: BTreeSet<NodeId>,
}

impl DppToIdppMap {
    pub(crate) fn from_edges(entries: impl IntoIterator<Item = ((NodeId, NodeId), NodeId)>) -> Self {
        let midpoint_of: BTreeMap<_, _> = entries.into_iter().collect();
        let midpoints = midpoint_of.values().copied().collect();
        DppToIdppMap {
            midpoint_of,
            midpoints,
        }
    }

    /// Midpoint placed on the original edge `{u, v}`, in either orientation.
    pub fn midpoint(&self, u: NodeId, v: NodeId) -> Option<NodeId> {
        self.midpoint_of.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn is_midpoint(&self, v: NodeId) -> bool {
        self.midpoints.contains(&v)
    }

    /// All `((u, v), midpoint)` entries in canonical edge order.
    pub fn entries(&self) -> impl Iterator<Item = ((NodeId, NodeId), NodeId)> + '_ {
        self.midpoint_of.iter().map(|(&e, &m)| (e, m))
    }

    pub fn midpoint_count(&self) -> usize {
        self.midpoint_of.len()
    }
}

/// Builds the induced-disjoint-paths instance that encodes maximum
/// independent set on `g`.
///
/// For each node `v` of `g`, two pendant nodes `a_v` and `b_v` are attached
/// to `v`, and `(a_v, b_v)` becomes terminal pair number `v`. On a graph with
/// `n` nodes and `m` edges the result has `3n` nodes, `m + 2n` edges, and `n`
/// pairs. The only `a_v`-`b_v` route is the two-edge path through `v`, so a
/// set of routable pairs corresponds exactly to an independent set.
pub fn is_to_idpp(g: &Graph) -> (IdppInstance, IsToIdppMap) {
    let n = g.node_count();
    let mut edges = g.edges().to_vec();
    let mut terminals = Vec::with_capacity(n);
    let mut pairs = Vec::with_capacity(n);
    for v in 0..n {
        let a = n + 2 * v;
        let b = n + 2 * v + 1;
        edges.push((v, a));
        edges.push((v, b));
        terminals.push((a, b));
        pairs.push(TerminalPair::new(a, b));
    }
    let graph = Graph::new(3 * n, &edges).expect("pendant gadget preserves graph validity");
    let inst = IdppInstance::new(graph, pairs).expect("pendant terminals are valid pairs");
    (inst, IsToIdppMap { terminals })
}

/// Routes, for each node `v` of `indep`, pair `v` via its forced gadget path
/// `[a_v, v, b_v]`.
///
/// Independence is not checked here: lifting a set with an internal edge
/// yields a solution the verifier rejects with `ADJACENT_PATHS`.
pub fn lift_is_solution(
    map: &IsToIdppMap,
    indep: &BTreeSet<NodeId>,
) -> Result<IdppSolution, ReductionError> {
    let mut routed = Vec::with_capacity(indep.len());
    for &v in indep {
        let (a, b) = map.terminals(v).ok_or(ReductionError::NotAnOriginalNode {
            node: v,
            original_count: map.original_nodes(),
        })?;
        routed.push((v, Path::new(vec![a, v, b])));
    }
    Ok(IdppSolution { routed })
}

/// Recovers the independent set from a feasible solution of the reduced
/// instance: the middle node of each routed gadget path.
///
/// The input must already have been verified feasible; entries that are not
/// gadget paths are rejected rather than guessed at.
pub fn project_idpp_solution(
    map: &IsToIdppMap,
    sol: &IdppSolution,
) -> Result<BTreeSet<NodeId>, ReductionError> {
    let mut nodes = BTreeSet::new();
    for (pair_index, path) in &sol.routed {
        let (a, b) = map
            .terminals(*pair_index)
            .ok_or(ReductionError::UnknownPair {
                pair_index: *pair_index,
            })?;
        if path.nodes != [a, *pair_index, b] {
            return Err(ReductionError::NotAGadgetPath {
                pair_index: *pair_index,
            });
        }
        nodes.insert(*pair_index);
    }
    Ok(nodes)
}

/// Subdivides every edge of the instance graph once: edge `{u, v}` becomes a
/// two-edge path `u - x - v` through a fresh midpoint `x`. Terminal pairs are
/// unchanged. The result has `n + m` nodes and `2m` edges.
///
/// Midpoints take ids `n, n+1, ...` following the canonical edge order.
pub fn dpp_to_idpp(inst: &DppInstance) -> (IdppInstance, DppToIdppMap) {
    let g = inst.graph();
    let n = g.node_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    let mut entries = Vec::with_capacity(g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let mid = n + i;
        edges.push((u, mid));
        edges.push((mid, v));
        entries.push(((u, v), mid));
    }
    let graph =
        Graph::new(n + g.edge_count(), &edges).expect("subdivision preserves graph validity");
    let reduced = IdppInstance::new(graph, inst.pairs().to_vec())
        .expect("terminals are untouched by subdivision");
    (reduced, DppToIdppMap::from_edges(entries))
}

/// Rewrites each node-disjoint path through the subdivided graph by inserting
/// the midpoint of every traversed edge.
///
/// On a feasible node-disjoint input the result is feasible for the reduced
/// instance: subdivision leaves no chords, and disjoint original paths cannot
/// touch each other's midpoints.
pub fn lift_dpp_solution(
    map: &DppToIdppMap,
    sol: &IdppSolution,
) -> Result<IdppSolution, ReductionError> {
    let mut routed = Vec::with_capacity(sol.routed.len());
    for (pair_index, path) in &sol.routed {
        let mut nodes = Vec::with_capacity(path.nodes.len() * 2);
        if let Some(&first) = path.nodes.first() {
            nodes.push(first);
        }
        for w in path.nodes.windows(2) {
            let mid = map
                .midpoint(w[0], w[1])
                .ok_or(ReductionError::UnknownEdge { u: w[0], v: w[1] })?;
            nodes.push(mid);
            nodes.push(w[1]);
        }
        routed.push((*pair_index, Path::new(nodes)));
    }
    Ok(IdppSolution { routed })
}

/// Drops the midpoint nodes from each routed path, recovering node-disjoint
/// paths of the original instance with the same solution size.
///
/// The input must be feasible for the reduced instance.
pub fn project_dpp_solution(
    map: &DppToIdppMap,
    sol: &IdppSolution,
) -> Result<IdppSolution, ReductionError> {
    let mut routed = Vec::with_capacity(sol.routed.len());
    for (pair_index, path) in &sol.routed {
        for endpoint in [path.nodes.first(), path.nodes.last()].into_iter().flatten() {
            if map.is_midpoint(*endpoint) {
                return Err(ReductionError::NotASubdividedPath {
                    pair_index: *pair_index,
                });
            }
        }
        let nodes: Vec<NodeId> = path
            .nodes
            .iter()
            .copied()
            .filter(|v| !map.is_midpoint(*v))
            .collect();
        routed.push((*pair_index, Path::new(nodes)));
    }
    Ok(IdppSolution { routed })
}
