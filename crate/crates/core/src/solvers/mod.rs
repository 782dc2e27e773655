//! Exact solvers for the k-rainbow domination number `γ_rk(G)`.
//!
//! * [`bruteforce`]: literal enumeration of all labelings, small graphs only.
//! * [`branch_bound`]: depth-first search over vertex labels with coverage
//!   lower bounds; also enumerates every optimum.
//! * [`transfer`]: sliding-window dynamic programming around the ring of a
//!   circulant `C(n; {1, s})`.
//!
//! All three return the lexicographically smallest optimum they find
//! (labels compared as encoded integers, vertex 0 first); see each module for
//! the exact tie-break.

pub mod branch_bound;
pub mod bruteforce;
pub mod transfer;

use core::fmt;
use core::time::Duration;

use crate::assignment::RainbowAssignment;
use crate::graph::Graph;
use crate::rdf::is_krdf;

pub use branch_bound::{enumerate_optima, solve_branch_bound, Enumeration};
pub use bruteforce::{solve_bruteforce, solve_bruteforce_with_guard, DEFAULT_GUARD};
pub use transfer::{solve_transfer_dp, solve_transfer_dp_for, TransferDp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    BranchBound,
    TransferDp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::BranchBound => "branch-bound",
            Method::TransferDp => "transfer-dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Search nodes (enumeration, branch and bound) or DP state updates.
    pub nodes: u64,
    /// Wall time as reported by the [`Clock`] the solver was given; zero when
    /// no clock was supplied.
    pub elapsed: Duration,
}

/// An optimum together with a labeling that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub method: Method,
    pub optimum: u32,
    pub witness: RainbowAssignment,
    pub stats: SolverStats,
    /// False when a budget ran out; `optimum` is then only an upper bound.
    pub exact: bool,
}

impl SolverResult {
    /// Panics unless `witness` is a kRDF of `g`; `optimum` is its weight.
    pub(crate) fn new(
        g: &Graph,
        method: Method,
        witness: RainbowAssignment,
        stats: SolverStats,
        exact: bool,
    ) -> Self {
        assert!(is_krdf(g, &witness), "{method} produced an invalid witness {witness}");
        SolverResult { method, optimum: witness.weight(), witness, stats, exact }
    }
}

/// Budgets for the search-based solvers. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Maximum number of optima returned by [`enumerate_optima`].
    pub enumeration_cap: Option<usize>,
}

impl SearchLimits {
    pub const UNLIMITED: SearchLimits =
        SearchLimits { node_budget: None, time_budget: None, enumeration_cap: None };
}

/// Monotonic time source; `now` is measured from an arbitrary fixed origin.
pub trait Clock {
    fn now(&self) -> Duration;
}

/// A clock that never advances, so time budgets never expire.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now(&self) -> Duration {
        Duration::ZERO
    }
}

/// Node and time accounting shared by the search solvers.
pub(crate) struct Budget<'a> {
    limits: SearchLimits,
    clock: &'a dyn Clock,
    start: Duration,
    pub nodes: u64,
    exhausted: bool,
}

impl<'a> Budget<'a> {
    pub fn new(limits: SearchLimits, clock: &'a dyn Clock) -> Self {
        Budget { limits, clock, start: clock.now(), nodes: 0, exhausted: false }
    }

    /// Counts one node; returns false once a budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.limits.node_budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(t) = self.limits.time_budget {
                self.exhausted = self.elapsed() > t;
            }
        }
        !self.exhausted
    }

    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn elapsed(&self) -> Duration {
        self.clock.now().saturating_sub(self.start)
    }

    pub fn stats(&self) -> SolverStats {
        SolverStats { nodes: self.nodes, elapsed: self.elapsed() }
    }
}
