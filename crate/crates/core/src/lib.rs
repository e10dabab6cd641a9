//! Error-detecting open-locating-dominating (DET:OLD) sets.
//!
//! A detector set `S` of a graph is *open-locating-dominating* when every
//! vertex has a neighbor in `S` and no two vertices see the same set of
//! detectors in their open neighborhoods. The error-detecting variant keeps
//! locating an intruder when one detector fails to report.
//!
//! The crate is `no_std` (it needs `alloc`) and covers:
//!
//! - [`graph`]: simple graphs, bit-parallel vertex sets, trail sets,
//!   canonical forms and small-order enumeration.
//! - [`verify`]: the OLD / RED:OLD / DET:OLD conditions with full failure
//!   reporting.
//! - [`solve`]: exact minimization (exhaustive oracle and branch-and-bound)
//!   and the edge-count bounds for graphs with DET:OLD.
//! - [`cubic`]: the trail-conflict characterization for cubic graphs.
//! - [`reduction`]: the 3-SAT construction and its certificate maps.
//! - [`grids`]: periodic detector patterns on the four planar grids.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cubic;
mod error;
pub mod graph;
pub mod grids;
pub mod reduction;
pub mod solve;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
pub use graph::{Graph, TrailSet, VertexSet};
pub use verify::{Failure, Level, PairKind, Verdict};

/// Exact ratio used for densities.
pub type Ratio = num_rational::Ratio<u64>;
