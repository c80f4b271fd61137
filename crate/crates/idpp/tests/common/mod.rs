//! Independent oracles and helpers shared by the integration suites.
//!
//! Everything here is written from scratch against plain adjacency matrices,
//! deliberately sharing no logic with the library implementations it checks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use idpp::graph::{Graph, IdppInstance, NodeId, TerminalPair};
use idpp::verify::IdppSolution;

/// Dense adjacency matrix built straight from the edge list.
pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Naive feasibility check: every structural rule tested by brute double
/// loops over all node pairs across paths.
pub fn naive_feasible(inst: &IdppInstance, sol: &IdppSolution) -> bool {
    let n = inst.graph().node_count();
    let k = inst.pair_count();
    let adj = adjacency_matrix(inst.graph());

    // Indices: in range and pairwise distinct.
    for (i, (idx, _)) in sol.routed.iter().enumerate() {
        if *idx >= k {
            return false;
        }
        for (other_idx, _) in &sol.routed[..i] {
            if other_idx == idx {
                return false;
            }
        }
    }

    for (idx, path) in &sol.routed {
        let p = &path.nodes;
        if p.is_empty() {
            return false;
        }
        if p.iter().any(|&v| v >= n) {
            return false;
        }
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                if p[i] == p[j] {
                    return false;
                }
            }
        }
        for w in p.windows(2) {
            if !adj[w[0]][w[1]] {
                return false;
            }
        }
        for i in 0..p.len() {
            for j in (i + 2)..p.len() {
                if adj[p[i]][p[j]] {
                    return false;
                }
            }
        }
        let pair = inst.pairs()[*idx];
        if p[0] != pair.source || p[p.len() - 1] != pair.sink {
            return false;
        }
    }

    for a in 0..sol.routed.len() {
        for b in (a + 1)..sol.routed.len() {
            for &u in &sol.routed[a].1.nodes {
                for &v in &sol.routed[b].1.nodes {
                    if u == v || adj[u][v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn all_simple_paths(adj: &[Vec<bool>], source: NodeId, sink: NodeId) -> Vec<Vec<NodeId>> {
    let mut found = Vec::new();
    let mut path = vec![source];
    let mut on_path = vec![false; adj.len()];
    on_path[source] = true;
    dfs(adj, sink, &mut path, &mut on_path, &mut found);
    return found;

    fn dfs(
        adj: &[Vec<bool>],
        sink: NodeId,
        path: &mut Vec<NodeId>,
        on_path: &mut Vec<bool>,
        found: &mut Vec<Vec<NodeId>>,
    ) {
        let head = *path.last().unwrap();
        if head == sink {
            found.push(path.clone());
            return;
        }
        for next in 0..adj.len() {
            if adj[head][next] && !on_path[next] {
                path.push(next);
                on_path[next] = true;
                dfs(adj, sink, path, on_path, found);
                on_path[next] = false;
                path.pop();
            }
        }
    }
}

fn chordless(adj: &[Vec<bool>], p: &[NodeId]) -> bool {
    for i in 0..p.len() {
        for j in (i + 2)..p.len() {
            if adj[p[i]][p[j]] {
                return false;
            }
        }
    }
    true
}

fn remote(adj: &[Vec<bool>], p: &[NodeId], q: &[NodeId]) -> bool {
    for &u in p {
        for &v in q {
            if u == v || adj[u][v] {
                return false;
            }
        }
    }
    true
}

fn disjoint(p: &[NodeId], q: &[NodeId]) -> bool {
    p.iter().all(|u| !q.contains(u))
}

fn tuple_exists(
    per_pair: &[Vec<Vec<NodeId>>],
    subset: &[usize],
    depth: usize,
    chosen: &mut Vec<Vec<NodeId>>,
    compatible: &dyn Fn(&[NodeId], &[NodeId]) -> bool,
) -> bool {
    if depth == subset.len() {
        return true;
    }
    for candidate in &per_pair[subset[depth]] {
        if chosen.iter().all(|prev| compatible(prev, candidate)) {
            chosen.push(candidate.clone());
            if tuple_exists(per_pair, subset, depth + 1, chosen, compatible) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn optimum_over_tuples(
    inst: &IdppInstance,
    per_pair: &[Vec<Vec<NodeId>>],
    compatible: &dyn Fn(&[NodeId], &[NodeId]) -> bool,
) -> usize {
    let k = inst.pair_count();
    let mut masks: Vec<u32> = (0..(1u32 << k)).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    for mask in masks {
        let subset: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let mut chosen = Vec::new();
        if tuple_exists(per_pair, &subset, 0, &mut chosen, compatible) {
            return subset.len();
        }
    }
    0
}

/// Exhaustive optimum over all tuples of chordless, mutually remote paths.
pub fn naive_idpp_optimum(inst: &IdppInstance) -> usize {
    let adj = adjacency_matrix(inst.graph());
    let per_pair: Vec<Vec<Vec<NodeId>>> = inst
        .pairs()
        .iter()
        .map(|pair| {
            all_simple_paths(&adj, pair.source, pair.sink)
                .into_iter()
                .filter(|p| chordless(&adj, p))
                .collect()
        })
        .collect();
    let compatible = |p: &[NodeId], q: &[NodeId]| remote(&adj, p, q);
    optimum_over_tuples(inst, &per_pair, &compatible)
}

/// Exhaustive optimum over all tuples of node-disjoint simple paths.
pub fn naive_dpp_optimum(inst: &IdppInstance) -> usize {
    let adj = adjacency_matrix(inst.graph());
    let per_pair: Vec<Vec<Vec<NodeId>>> = inst
        .pairs()
        .iter()
        .map(|pair| all_simple_paths(&adj, pair.source, pair.sink))
        .collect();
    let compatible = |p: &[NodeId], q: &[NodeId]| disjoint(p, q);
    optimum_over_tuples(inst, &per_pair, &compatible)
}

/// Independence check straight off the edge list.
pub fn is_independent(g: &Graph, set: &BTreeSet<NodeId>) -> bool {
    g.edges()
        .iter()
        .all(|(u, v)| !(set.contains(u) && set.contains(v)))
}

/// Relabels a graph by `perm` (`perm[old] = new`).
pub fn permute_graph(g: &Graph, perm: &[NodeId]) -> Graph {
    let edges: Vec<(NodeId, NodeId)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.node_count(), &edges).expect("a relabeling preserves validity")
}

/// Relabels an instance's graph and terminals by `perm`.
pub fn permute_instance(inst: &IdppInstance, perm: &[NodeId]) -> IdppInstance {
    let graph = permute_graph(inst.graph(), perm);
    let pairs: Vec<TerminalPair> = inst
        .pairs()
        .iter()
        .map(|p| TerminalPair::new(perm[p.source], perm[p.sink]))
        .collect();
    IdppInstance::new(graph, pairs).expect("a relabeling preserves validity")
}

/// Builds the graph on `n` nodes whose edges are the bits of `mask`, in
/// lexicographic pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("mask edges are valid by construction")
}
