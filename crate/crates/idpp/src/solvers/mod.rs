//! Exact brute-force solvers, a greedy heuristic, and the case-split wrapper
//! that dispatches between brute force and a supplied approximation.

use std::time::Duration;

use thiserror::Error;

mod boost;
mod exact;
mod greedy;
mod paths;

pub use boost::{boost_threshold, boosted_solve, check_ratio_transfer, BoostDispatch, BoostParams};
pub use exact::{exact_dpp, exact_idpp, exact_max_independent_set};
pub use greedy::greedy_idpp;

/// Bounds on what the exact solvers are allowed to attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveBudget {
    /// Largest graph (by node count) an exact solver accepts.
    pub max_nodes_exact: usize,
    /// Optional cap on path length (in nodes) during enumeration.
    pub max_path_nodes: Option<usize>,
    /// Optional wall-clock limit; exceeding it yields a best-effort result.
    pub time_limit: Option<Duration>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_nodes_exact: 20,
            max_path_nodes: None,
            time_limit: None,
        }
    }
}

impl SolveBudget {
    pub fn with_max_nodes(max_nodes_exact: usize) -> Self {
        SolveBudget {
            max_nodes_exact,
            ..SolveBudget::default()
        }
    }
}

/// Outcome of an exact solve. A time-limited run that could not finish
/// returns the best solution found so far, explicitly flagged, so callers
/// must decide how to treat non-optimal answers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult<T> {
    Optimal(T),
    TimedOut(T),
}

impl<T> SolveResult<T> {
    pub fn solution(&self) -> &T {
        match self {
            SolveResult::Optimal(s) | SolveResult::TimedOut(s) => s,
        }
    }

    pub fn into_solution(self) -> T {
        match self {
            SolveResult::Optimal(s) | SolveResult::TimedOut(s) => s,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, SolveResult::Optimal(_))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("graph has {nodes} nodes but the exact budget allows at most {max_nodes_exact}")]
    BudgetExceeded {
        nodes: usize,
        max_nodes_exact: usize,
    },
    #[error("budget must allow at least one node")]
    InvalidBudget,
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    EpsilonOutOfRange(f64),
    #[error(
        "brute-force region too large for budget: every instance below the threshold of \
         {threshold} nodes must be solved exactly, but the budget allows at most \
         {max_nodes_exact}"
    )]
    BruteForceRegionTooLarge {
        threshold: u64,
        max_nodes_exact: usize,
    },
    #[error("time limit expired in the brute-force case of the boosted solver")]
    BruteForceTimedOut,
}
