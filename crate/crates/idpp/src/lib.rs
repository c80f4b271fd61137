//! Toolkit for the induced disjoint paths problem (IDPP).
//!
//! A set of paths in an undirected graph is *induced disjoint* when each path
//! is chordless and no two paths share a node or have an edge between them.
//! Given a graph and a list of source-sink pairs, IDPP asks to connect as
//! many pairs as possible by such paths.
//!
//! The crate provides:
//!
//! - [`graph`]: simple undirected graphs and terminal-pair instances;
//! - [`verify`]: chordless-path and mutual-remoteness checks, plus a total
//!   solution verifier with per-defect diagnostics;
//! - [`reductions`]: the pendant-pair gadget encoding independent set as
//!   IDPP and the edge-subdivision encoding node-disjoint paths as IDPP,
//!   each with solution lift/project mappings;
//! - [`solvers`]: exact brute-force solvers for IDPP, node-disjoint paths,
//!   and independent set, a shortest-first greedy heuristic, and a
//!   case-split wrapper that brute-forces small graphs and delegates the
//!   rest to a supplied approximation;
//! - [`io`]: canonical text formats for every object above;
//! - [`generators`]: seeded random graphs and instances.
//!
//! All solver output is deterministic: ties are broken by documented rules,
//! so identical inputs serialize to identical bytes.

pub mod generators;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use graph::{Graph, GraphError, IdppInstance, InstanceError, NodeId, TerminalPair};
pub use solvers::{SolveBudget, SolveError, SolveResult};
pub use verify::{IdppSolution, Path, Verdict, Violation, ViolationKind};
