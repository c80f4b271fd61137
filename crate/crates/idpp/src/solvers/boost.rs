//! Case-split wrapper: brute force below a size threshold, a supplied
//! approximation above it, plus the inequality check that justifies the
//! threshold choice.

use crate::graph::IdppInstance;
use crate::verify::IdppSolution;

use super::exact::exact_idpp;
use super::{SolveBudget, SolveError, SolveResult};

/// Within-tolerance comparisons count as satisfied: the transfer inequality
/// holds with exact equality right at the threshold, so boundary cases are
/// real, not numerical noise.
const RATIO_TRANSFER_REL_TOL: f64 = 1e-12;

/// Parameters of the case-split wrapper for a fixed epsilon.
#[derive(Debug, Clone, PartialEq)]
pub struct BoostParams {
    epsilon: f64,
    epsilon_prime: f64,
    threshold: u64,
}

impl BoostParams {
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The improved exponent parameter, `epsilon^2`.
    pub fn epsilon_prime(&self) -> f64 {
        self.epsilon_prime
    }

    /// Graphs with fewer nodes than this are solved by brute force.
    pub fn threshold(&self) -> u64 {
        self.threshold
    }
}

/// Which branch of [`boosted_solve`] produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostDispatch {
    /// Below the threshold: the returned solution is an exact optimum.
    BruteForce,
    /// At or above the threshold: the supplied approximation's answer.
    Approximate,
}

/// Derives the wrapper parameters for `epsilon` in (0, 1): the node-count
/// threshold `ceil(3^(1 + 1/epsilon))` and `epsilon_prime = epsilon^2`.
///
/// The threshold saturates at `u64::MAX` for tiny epsilon; every graph whose
/// size fits in memory is then in the brute-force region, which the budget
/// check in [`boosted_solve`] will refuse.
pub fn boost_threshold(epsilon: f64) -> Result<BoostParams, SolveError> {
    check_epsilon(epsilon)?;
    Ok(BoostParams {
        epsilon,
        epsilon_prime: epsilon * epsilon,
        threshold: ceil_pow3(1.0 + 1.0 / epsilon),
    })
}

fn check_epsilon(epsilon: f64) -> Result<(), SolveError> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(SolveError::EpsilonOutOfRange(epsilon))
    }
}

/// `ceil(3^e)` as an integer. Exponents within 1e-9 of an integer are
/// evaluated by integer power: `3^e` cannot be a non-integer rational, so the
/// only integral values of the power occur at integral `e`, and float
/// rounding must not push those over the ceiling.
fn ceil_pow3(e: f64) -> u64 {
    let rounded = e.round();
    if (e - rounded).abs() < 1e-9 {
        if rounded > 40.0 {
            return u64::MAX; // 3^41 exceeds u64
        }
        return 3u64.pow(rounded as u32);
    }
    let x = 3f64.powf(e);
    if x >= u64::MAX as f64 {
        u64::MAX
    } else {
        x.ceil() as u64
    }
}

/// Evaluates `(n/3)^(1 - eps^2) >= n^(1 - eps)` in log space, treating
/// agreement within a relative tolerance of 1e-12 as satisfied.
///
/// This is the inequality that makes the case-split wrapper's ratio bound go
/// through for all `n` at or above the threshold.
pub fn check_ratio_transfer(n: u64, epsilon: f64) -> Result<bool, SolveError> {
    check_epsilon(epsilon)?;
    assert!(n >= 1, "node count must be positive");
    // In log space an absolute slack equals a relative slack on the powers.
    let ln_n = (n as f64).ln();
    let lhs = (1.0 - epsilon * epsilon) * (ln_n - 3f64.ln());
    let rhs = (1.0 - epsilon) * ln_n;
    Ok(lhs >= rhs - RATIO_TRANSFER_REL_TOL)
}

/// Case-split solver: below the threshold the instance is solved exactly; at
/// or above it the supplied `base` procedure answers.
///
/// If the brute-force region is not fully covered by the budget (that is,
/// some graph below the threshold would be too big to solve exactly), the
/// call is refused outright instead of silently degrading: the threshold
/// grows as `3^(1 + 1/epsilon)`, and a partially honored brute-force case
/// would void the wrapper's contract.
pub fn boosted_solve<F>(
    inst: &IdppInstance,
    params: &BoostParams,
    base: F,
    budget: &SolveBudget,
) -> Result<(IdppSolution, BoostDispatch), SolveError>
where
    F: FnOnce(&IdppInstance) -> IdppSolution,
{
    let n = inst.graph().node_count() as u64;
    if n >= params.threshold {
        return Ok((base(inst), BoostDispatch::Approximate));
    }
    let region_max = params.threshold - 1;
    if region_max > budget.max_nodes_exact as u64 {
        return Err(SolveError::BruteForceRegionTooLarge {
            threshold: params.threshold,
            max_nodes_exact: budget.max_nodes_exact,
        });
    }
    match exact_idpp(inst, budget)? {
        SolveResult::Optimal(sol) => Ok((sol, BoostDispatch::BruteForce)),
        SolveResult::TimedOut(_) => Err(SolveError::BruteForceTimedOut),
    }
}
