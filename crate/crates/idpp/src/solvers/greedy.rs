//! Shortest-first greedy heuristic.

use crate::graph::{Graph, IdppInstance, NodeId};
use crate::verify::{IdppSolution, Path};

/// Lexicographically smallest hop-shortest path from `source` to `sink`
/// through alive nodes, if one exists.
fn lex_shortest_path(
    g: &Graph,
    alive: &[bool],
    source: NodeId,
    sink: NodeId,
) -> Option<Vec<NodeId>> {
    if !alive[source] || !alive[sink] {
        return None;
    }
    if source == sink {
        return Some(vec![source]);
    }
    // Distances to the sink, so the walk from the source can always step to
    // the smallest neighbor one hop closer.
    let n = g.node_count();
    let mut dist = vec![usize::MAX; n];
    dist[sink] = 0;
    let mut queue = vec![sink];
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        i += 1;
        for &w in g.neighbors(u) {
            if alive[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    if dist[source] == usize::MAX {
        return None;
    }
    let mut path = Vec::with_capacity(dist[source] + 1);
    let mut current = source;
    path.push(current);
    while current != sink {
        current = *g
            .neighbors(current)
            .iter()
            .find(|&&w| alive[w] && dist[w] == dist[current] - 1)
            .expect("a finite distance has a descending neighbor");
        path.push(current);
    }
    Some(path)
}

/// Greedy heuristic: repeatedly route the pair whose current shortest route
/// is shortest overall (ties to the lower pair index), then delete the routed
/// path's closed neighborhood from the residual graph. Stops when no
/// unrouted pair is routable.
///
/// Hop-shortest paths are chordless and later paths avoid earlier ones'
/// neighborhoods, so the output always verifies feasible. No approximation
/// guarantee is asserted; the bench command reports measured ratios.
pub fn greedy_idpp(inst: &IdppInstance) -> IdppSolution {
    let g = inst.graph();
    let mut alive = vec![true; g.node_count()];
    let mut routed_flag = vec![false; inst.pair_count()];
    let mut routed = Vec::new();

    loop {
        let mut best: Option<(usize, Vec<NodeId>)> = None;
        for (i, pair) in inst.pairs().iter().enumerate() {
            if routed_flag[i] {
                continue;
            }
            if let Some(path) = lex_shortest_path(g, &alive, pair.source, pair.sink) {
                let better = match &best {
                    None => true,
                    Some((_, current)) => path.len() < current.len(),
                };
                if better {
                    best = Some((i, path));
                }
            }
        }
        let Some((i, path)) = best else {
            break;
        };
        for &v in &path {
            alive[v] = false;
            for &w in g.neighbors(v) {
                alive[w] = false;
            }
        }
        routed_flag[i] = true;
        routed.push((i, Path::new(path)));
    }

    IdppSolution { routed }
}
