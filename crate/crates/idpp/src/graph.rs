//! Simple undirected graphs over contiguous node ids, plus the terminal-pair
//! instance type the solvers consume.

use std::collections::BTreeSet;

use thiserror::Error;

/// Node identifier. Nodes of an `n`-node graph are exactly `0..n`.
pub type NodeId = usize;

/// Rejected inputs to [`Graph::new`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("node {node} out of range for a graph on {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: NodeId, v: NodeId },
}

/// Rejected inputs to [`IdppInstance::new`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("pair {pair}: node {node} out of range for a graph on {node_count} nodes")]
    PairOutOfRange {
        pair: usize,
        node: NodeId,
        node_count: usize,
    },
    #[error("pair {pair}: source and sink are both node {node}")]
    DegeneratePair { pair: usize, node: NodeId },
}

/// A simple undirected graph: no self-loops, no parallel edges.
///
/// Immutable after construction, so values can be shared freely across
/// threads. Neighbor lists are kept sorted; `adjacent` is a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    adj: Vec<Vec<NodeId>>,
    edges: Vec<(NodeId, NodeId)>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are stored canonically as
    /// `(u, v)` with `u < v`, regardless of the order endpoints appear in.
    ///
    /// Duplicate edges (in either orientation) are an error rather than being
    /// silently merged: callers relying on exact edge counts must pass clean
    /// input.
    pub fn new(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); node_count];
        let mut canonical = BTreeSet::new();
        for &(a, b) in edges {
            for node in [a, b] {
                if node >= node_count {
                    return Err(GraphError::NodeOutOfRange { node, node_count });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !canonical.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            node_count,
            adj,
            edges: canonical.into_iter().collect(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: each edge once as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        self.check_node(v);
        &self.adj[v]
    }

    /// Panics if `v` is out of range.
    pub fn degree(&self, v: NodeId) -> usize {
        self.neighbors(v).len()
    }

    /// True iff `{u, v}` is an edge. Panics if `u` or `v` is out of range.
    /// Always false for `u == v` (no self-loops exist).
    pub fn adjacent(&self, u: NodeId, v: NodeId) -> bool {
        self.check_node(u);
        self.check_node(v);
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Induced subgraph on the nodes that are neither in `nodes` nor adjacent
    /// to any node in `nodes`. The second component maps each new node id to
    /// the original id it came from.
    ///
    /// Panics if any id in `nodes` is out of range.
    pub fn remove_closed_neighborhood(&self, nodes: &[NodeId]) -> (Graph, Vec<NodeId>) {
        let mut keep = vec![true; self.node_count];
        for &v in nodes {
            self.check_node(v);
            keep[v] = false;
            for &w in &self.adj[v] {
                keep[w] = false;
            }
        }

        let remap: Vec<NodeId> = (0..self.node_count).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.node_count];
        for (id, &orig) in remap.iter().enumerate() {
            new_id[orig] = id;
        }
        let edges: Vec<(NodeId, NodeId)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep[u] && keep[v])
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        let graph = Graph::new(remap.len(), &edges)
            .expect("an induced subgraph of a valid graph is valid");
        (graph, remap)
    }

    fn check_node(&self, v: NodeId) {
        assert!(
            v < self.node_count,
            "node {v} out of range for a graph on {} nodes",
            self.node_count
        );
    }
}

/// One source-sink pair to be connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TerminalPair {
    pub source: NodeId,
    pub sink: NodeId,
}

impl TerminalPair {
    pub fn new(source: NodeId, sink: NodeId) -> Self {
        TerminalPair { source, sink }
    }
}

/// A graph together with an ordered list of terminal pairs.
///
/// Distinct pairs may share terminal nodes; disjointness is a property of
/// solutions, not of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdppInstance {
    graph: Graph,
    pairs: Vec<TerminalPair>,
}

impl IdppInstance {
    pub fn new(graph: Graph, pairs: Vec<TerminalPair>) -> Result<Self, InstanceError> {
        let node_count = graph.node_count();
        for (i, p) in pairs.iter().enumerate() {
            for node in [p.source, p.sink] {
                if node >= node_count {
                    return Err(InstanceError::PairOutOfRange {
                        pair: i,
                        node,
                        node_count,
                    });
                }
            }
            if p.source == p.sink {
                return Err(InstanceError::DegeneratePair {
                    pair: i,
                    node: p.source,
                });
            }
        }
        Ok(IdppInstance { graph, pairs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &[TerminalPair] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }
}
