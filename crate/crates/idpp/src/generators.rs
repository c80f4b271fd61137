//! Seeded random graphs and instances for benches and tests. Everything here
//! is a pure function of the supplied RNG state.

use rand::seq::index::sample;
use rand::{Rng, RngExt};

use crate::graph::{Graph, IdppInstance, NodeId, TerminalPair};

/// Erdős–Rényi graph: each of the `n(n-1)/2` candidate edges is kept
/// independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability must be in [0, 1]");
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid by construction")
}

/// Uniform random graph with exactly `m` edges out of the `n(n-1)/2`
/// possible ones. Panics if `m` exceeds that count.
pub fn gnm<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Graph {
    let all: Vec<(NodeId, NodeId)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    assert!(
        m <= all.len(),
        "requested {m} edges but only {} are possible",
        all.len()
    );
    let mut picked = sample(rng, all.len(), m).into_vec();
    picked.sort_unstable();
    let edges: Vec<_> = picked.into_iter().map(|i| all[i]).collect();
    Graph::new(n, &edges).expect("sampled edges are valid by construction")
}

/// `k` terminal pairs with distinct endpoints, chosen uniformly. Distinct
/// pairs may repeat or share terminals. Requires `n >= 2`.
pub fn random_pairs<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Vec<TerminalPair> {
    assert!(n >= 2, "need at least two nodes to form a pair");
    (0..k)
        .map(|_| {
            let source = rng.random_range(0..n);
            let mut sink = rng.random_range(0..n - 1);
            if sink >= source {
                sink += 1;
            }
            TerminalPair::new(source, sink)
        })
        .collect()
}

/// Random instance: a `gnp(n, p)` graph plus `k` random pairs.
pub fn random_instance<R: Rng + ?Sized>(n: usize, p: f64, k: usize, rng: &mut R) -> IdppInstance {
    let graph = gnp(n, p, rng);
    let pairs = random_pairs(n, k, rng);
    IdppInstance::new(graph, pairs).expect("generated pairs are valid by construction")
}
