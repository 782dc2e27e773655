//! Exact rainbow domination on circulant graphs `C(n; S)` and generalized
//! Petersen graphs `P(n, k)`.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`graph`]: the graph families and the textual graph-spec grammar,
//! * [`assignment`]: color-set labelings and their digit text encoding,
//! * [`rdf`]: the k-rainbow domination condition, weights and the
//!   class-count audit for 4-regular graphs,
//! * [`formulas`]: closed forms, bounds and the explicit `C(n; {1, 4})`
//!   labelings,
//! * [`solvers`]: exhaustive enumeration, branch and bound, and a
//!   transfer-matrix DP for `C(n; {1, s})`.
#![no_std]

extern crate alloc;

pub mod assignment;
mod error;
pub mod formulas;
pub mod graph;
pub mod rdf;
pub mod solvers;

pub use assignment::{ColorSet, RainbowAssignment};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use rdf::{BetaAudit, ValidationReport, Violation};
pub use solvers::{Method, SearchLimits, SolverResult, SolverStats};
