//! Exact minimum detector sets and the edge-count bounds for graphs that
//! admit DET:OLD.

use crate::graph::VertexSet;

mod bb;
mod bounds;
mod oracle;

pub use bb::solve_bb;
pub use bounds::{deg2_neighbor_ok, min_edge_bound, min_edge_witness, MinEdgeWitness};
pub use oracle::{solve_oracle, ORACLE_MAX_N};

/// Outcome of an exact minimization.
///
/// `witness` is `None` when no set of the level exists. Solvers in this
/// module return the lexicographically smallest optimal set (comparing
/// sorted vertex lists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub witness: Option<VertexSet>,
    /// Search nodes (or candidate subsets) examined; diagnostics only.
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn infeasible(nodes_explored: u64) -> Self {
        SolveResult { witness: None, nodes_explored }
    }

    pub fn feasible(&self) -> bool {
        self.witness.is_some()
    }

    pub fn optimum(&self) -> Option<usize> {
        self.witness.as_ref().map(VertexSet::len)
    }
}
