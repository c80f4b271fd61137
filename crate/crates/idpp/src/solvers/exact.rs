//! Brute-force optimum solvers with deterministic tie-breaking.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::graph::{Graph, IdppInstance, NodeId};
use crate::verify::{IdppSolution, Path};

use super::greedy::greedy_idpp;
use super::paths::{chordless_paths, simple_paths, Ticker, TimeUp};
use super::{SolveBudget, SolveError, SolveResult};

/// Lexicographic iterator over all size-`take` ascending index lists drawn
/// from `0..from`.
struct Combinations {
    from: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(from: usize, take: usize) -> Self {
        let current = (take <= from).then(|| (0..take).collect());
        Combinations { from, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let mut next = current.clone();
        let t = next.len();
        let mut i = t;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] != self.from - t + i {
                next[i] += 1;
                for j in (i + 1)..t {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(current)
    }
}

fn check_budget(nodes: usize, budget: &SolveBudget) -> Result<(), SolveError> {
    if budget.max_nodes_exact < 1 {
        return Err(SolveError::InvalidBudget);
    }
    if nodes > budget.max_nodes_exact {
        return Err(SolveError::BudgetExceeded {
            nodes,
            max_nodes_exact: budget.max_nodes_exact,
        });
    }
    Ok(())
}

/// Maximum-cardinality independent set by subset enumeration.
///
/// Ties are broken toward the lexicographically smallest sorted node list, so
/// the result is the same on every run.
pub fn exact_max_independent_set(
    g: &Graph,
    budget: &SolveBudget,
) -> Result<BTreeSet<NodeId>, SolveError> {
    let n = g.node_count();
    check_budget(n, budget)?;
    assert!(n <= 63, "subset enumeration uses 64-bit masks");

    let mut adj_mask = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj_mask[u] |= 1 << v;
        adj_mask[v] |= 1 << u;
    }

    let mut best: u64 = 0;
    let mut best_size = 0u32;
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() < best_size {
            continue;
        }
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj_mask[v] & mask != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if !independent {
            continue;
        }
        if mask.count_ones() > best_size || (mask.count_ones() == best_size && lex_less(mask, best))
        {
            best = mask;
            best_size = mask.count_ones();
        }
    }

    Ok((0..n).filter(|&v| best & (1 << v) != 0).collect())
}

/// True iff the sorted node list of `a` is lexicographically smaller than
/// that of `b`, for equal-popcount masks.
fn lex_less(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    while a != 0 && b != 0 {
        let va = a.trailing_zeros();
        let vb = b.trailing_zeros();
        if va != vb {
            return va < vb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    false
}

enum Disjointness {
    Induced,
    NodeOnly,
}

struct SubsetRouter<'a> {
    inst: &'a IdppInstance,
    mode: Disjointness,
    max_path_nodes: Option<usize>,
    alive: Vec<bool>,
}

impl<'a> SubsetRouter<'a> {
    fn new(inst: &'a IdppInstance, mode: Disjointness, max_path_nodes: Option<usize>) -> Self {
        SubsetRouter {
            inst,
            mode,
            max_path_nodes,
            alive: vec![true; inst.graph().node_count()],
        }
    }

    /// Tries to route every pair in `subset`, in order. Each routed path and
    /// (for induced disjointness) its neighbors are removed from the residual
    /// graph before the next pair is attempted.
    fn route(
        &mut self,
        subset: &[usize],
        ticker: &mut Ticker,
    ) -> Result<Option<Vec<(usize, Path)>>, TimeUp> {
        self.alive.fill(true);
        let mut routed = Vec::with_capacity(subset.len());
        if self.attempt(subset, 0, &mut routed, ticker)? {
            Ok(Some(routed))
        } else {
            Ok(None)
        }
    }

    fn attempt(
        &mut self,
        subset: &[usize],
        depth: usize,
        routed: &mut Vec<(usize, Path)>,
        ticker: &mut Ticker,
    ) -> Result<bool, TimeUp> {
        if depth == subset.len() {
            return Ok(true);
        }
        ticker.tick()?;
        let pair_index = subset[depth];
        let pair = self.inst.pairs()[pair_index];
        let g = self.inst.graph();
        if !self.alive[pair.source] || !self.alive[pair.sink] {
            return Ok(false);
        }
        let candidates = match self.mode {
            Disjointness::Induced => chordless_paths(
                g,
                &self.alive,
                pair.source,
                pair.sink,
                self.max_path_nodes,
                ticker,
            )?,
            Disjointness::NodeOnly => simple_paths(
                g,
                &self.alive,
                pair.source,
                pair.sink,
                self.max_path_nodes,
                ticker,
            )?,
        };
        for nodes in candidates {
            let removed = self.remove(&nodes);
            routed.push((pair_index, Path::new(nodes)));
            if self.attempt(subset, depth + 1, routed, ticker)? {
                return Ok(true);
            }
            routed.pop();
            for v in removed {
                self.alive[v] = true;
            }
        }
        Ok(false)
    }

    /// Kills the path nodes, plus their whole neighborhoods when paths must
    /// be mutually remote. Returns what was killed, for backtracking.
    fn remove(&mut self, nodes: &[NodeId]) -> Vec<NodeId> {
        let g = self.inst.graph();
        let mut removed = Vec::new();
        for &v in nodes {
            if self.alive[v] {
                self.alive[v] = false;
                removed.push(v);
            }
            if matches!(self.mode, Disjointness::Induced) {
                for &w in g.neighbors(v) {
                    if self.alive[w] {
                        self.alive[w] = false;
                        removed.push(w);
                    }
                }
            }
        }
        removed
    }
}

fn exact_search(
    inst: &IdppInstance,
    budget: &SolveBudget,
    mode: Disjointness,
    incumbent: IdppSolution,
) -> Result<SolveResult<IdppSolution>, SolveError> {
    check_budget(inst.graph().node_count(), budget)?;
    let deadline = budget.time_limit.map(|limit| Instant::now() + limit);
    let mut ticker = Ticker::new(deadline);
    let mut router = SubsetRouter::new(inst, mode, budget.max_path_nodes);

    let k = inst.pair_count();
    for size in (0..=k).rev() {
        for subset in Combinations::new(k, size) {
            match router.route(&subset, &mut ticker) {
                Ok(Some(routed)) => {
                    return Ok(SolveResult::Optimal(IdppSolution { routed }));
                }
                Ok(None) => {}
                Err(TimeUp) => return Ok(SolveResult::TimedOut(incumbent)),
            }
        }
    }
    unreachable!("the empty subset always routes");
}

/// Optimum solution by descending search over pair subsets.
///
/// Subsets of each size are visited in lexicographic order; candidate paths
/// for a pair are visited shortest first, then lexicographically; the first
/// fully routed subset wins. This fixes the returned solution byte for byte.
///
/// If the time limit expires the best solution found so far (seeded with the
/// greedy heuristic's answer) is returned as [`SolveResult::TimedOut`].
pub fn exact_idpp(
    inst: &IdppInstance,
    budget: &SolveBudget,
) -> Result<SolveResult<IdppSolution>, SolveError> {
    let incumbent = greedy_idpp(inst);
    exact_search(inst, budget, Disjointness::Induced, incumbent)
}

/// Optimum node-disjoint solution: same search as [`exact_idpp`] with
/// chordlessness and mutual remoteness relaxed to node-disjointness.
pub fn exact_dpp(
    inst: &IdppInstance,
    budget: &SolveBudget,
) -> Result<SolveResult<IdppSolution>, SolveError> {
    exact_search(inst, budget, Disjointness::NodeOnly, IdppSolution::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TerminalPair;
    use crate::reductions::is_to_idpp;
    use crate::verify::verify_idpp_solution;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn budget() -> SolveBudget {
        SolveBudget::default()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(3, 0).collect::<Vec<_>>(), vec![vec![]]);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn independent_set_examples() {
        let mis = exact_max_independent_set(&k3(), &budget()).unwrap();
        assert_eq!(mis, [0].into_iter().collect());

        let mis = exact_max_independent_set(&c5(), &budget()).unwrap();
        assert_eq!(mis, [0, 2].into_iter().collect());

        let edgeless = Graph::new(4, &[]).unwrap();
        let mis = exact_max_independent_set(&edgeless, &budget()).unwrap();
        assert_eq!(mis, [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn independent_set_tie_break_is_lexicographic() {
        // Maximum sets are {0, 3} and {1, 2}: the first is lexicographically
        // smaller even though its bitmask value is larger.
        let g = Graph::new(4, &[(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap();
        let mis = exact_max_independent_set(&g, &budget()).unwrap();
        assert_eq!(mis, [0, 3].into_iter().collect());
    }

    #[test]
    fn independent_set_budget() {
        let g = Graph::new(5, &[]).unwrap();
        let small = SolveBudget::with_max_nodes(4);
        assert_eq!(
            exact_max_independent_set(&g, &small).unwrap_err(),
            SolveError::BudgetExceeded {
                nodes: 5,
                max_nodes_exact: 4
            }
        );
        let zero = SolveBudget::with_max_nodes(0);
        assert_eq!(
            exact_max_independent_set(&g, &zero).unwrap_err(),
            SolveError::InvalidBudget
        );
    }

    #[test]
    fn idpp_on_pendant_gadgets_matches_independence_number() {
        let (inst, _) = is_to_idpp(&k3());
        let sol = exact_idpp(&inst, &budget()).unwrap();
        assert!(sol.is_optimal());
        assert_eq!(sol.solution().size(), 1);
        assert!(verify_idpp_solution(&inst, sol.solution()).feasible());

        let (inst, _) = is_to_idpp(&c5());
        let sol = exact_idpp(&inst, &budget()).unwrap();
        assert_eq!(sol.solution().size(), 2);
        assert!(verify_idpp_solution(&inst, sol.solution()).feasible());
    }

    #[test]
    fn idpp_with_no_pairs() {
        let inst = IdppInstance::new(k3(), vec![]).unwrap();
        let sol = exact_idpp(&inst, &budget()).unwrap();
        assert!(sol.is_optimal());
        assert_eq!(sol.solution().size(), 0);
    }

    #[test]
    fn dpp_examples() {
        // K4 with pairs (0,1) and (2,3): both direct edges work.
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = IdppInstance::new(
            k4,
            vec![TerminalPair::new(0, 1), TerminalPair::new(2, 3)],
        )
        .unwrap();
        let sol = exact_dpp(&inst, &budget()).unwrap();
        assert_eq!(sol.solution().size(), 2);
        assert_eq!(sol.solution().routed[0].1.nodes, vec![0, 1]);
        assert_eq!(sol.solution().routed[1].1.nodes, vec![2, 3]);

        // P3 with pairs sharing terminal 0: only one can be routed.
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = IdppInstance::new(
            p3,
            vec![TerminalPair::new(0, 2), TerminalPair::new(0, 1)],
        )
        .unwrap();
        let sol = exact_dpp(&inst, &budget()).unwrap();
        assert_eq!(sol.solution().size(), 1);

        let empty = IdppInstance::new(Graph::new(2, &[]).unwrap(), vec![]).unwrap();
        assert_eq!(exact_dpp(&empty, &budget()).unwrap().solution().size(), 0);
    }

    #[test]
    fn exact_solutions_are_deterministic() {
        let (inst, _) = is_to_idpp(&c5());
        let a = exact_idpp(&inst, &budget()).unwrap();
        let b = exact_idpp(&inst, &budget()).unwrap();
        assert_eq!(a, b);
        // First feasible subset in lexicographic order: pairs {0, 2}.
        let indices: Vec<usize> = a.solution().routed.iter().map(|(i, _)| *i).collect();
        assert_eq!(indices, vec![0, 2]);
    }

    #[test]
    fn path_length_cap_limits_the_search() {
        // The only 0-3 route in P4 uses four nodes.
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = IdppInstance::new(p4, vec![TerminalPair::new(0, 3)]).unwrap();
        let capped = SolveBudget {
            max_path_nodes: Some(3),
            ..SolveBudget::default()
        };
        assert_eq!(exact_idpp(&inst, &capped).unwrap().solution().size(), 0);
        let roomy = SolveBudget {
            max_path_nodes: Some(4),
            ..SolveBudget::default()
        };
        assert_eq!(exact_idpp(&inst, &roomy).unwrap().solution().size(), 1);
    }

    #[test]
    fn zero_time_limit_returns_best_effort() {
        let (inst, _) = is_to_idpp(&c5());
        let tight = SolveBudget {
            time_limit: Some(std::time::Duration::ZERO),
            ..SolveBudget::default()
        };
        let sol = exact_idpp(&inst, &tight).unwrap();
        assert!(!sol.is_optimal());
        // The fallback is the greedy answer, which is itself feasible.
        assert!(verify_idpp_solution(&inst, sol.solution()).feasible());
    }
}
