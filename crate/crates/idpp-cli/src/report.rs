//! One-line machine-readable run reports.

use std::time::Duration;

use idpp::graph::IdppInstance;
use idpp::verify::IdppSolution;

/// Summary of one solve run. The stdout line excludes the wall time so that
/// identical inputs produce identical bytes; timing is reported on stderr.
pub struct RunReport {
    pub command: &'static str,
    pub algo: &'static str,
    pub nodes: usize,
    pub edges: usize,
    pub pairs: usize,
    pub size: usize,
    pub optimal: bool,
    pub wall: Duration,
}

impl RunReport {
    pub fn new(
        algo: &'static str,
        inst: &IdppInstance,
        solution: &IdppSolution,
        optimal: bool,
        wall: Duration,
    ) -> Self {
        RunReport {
            command: "solve",
            algo,
            nodes: inst.graph().node_count(),
            edges: inst.graph().edge_count(),
            pairs: inst.pair_count(),
            size: solution.size(),
            optimal,
            wall,
        }
    }

    pub fn stdout_line(&self) -> String {
        format!(
            "{{\"command\":\"{}\",\"algo\":\"{}\",\"n\":{},\"m\":{},\"k\":{},\"size\":{},\"optimal\":{}}}",
            self.command, self.algo, self.nodes, self.edges, self.pairs, self.size, self.optimal
        )
    }

    pub fn stderr_line(&self) -> String {
        format!("wall_time_ms={:.3}", self.wall.as_secs_f64() * 1e3)
    }
}
