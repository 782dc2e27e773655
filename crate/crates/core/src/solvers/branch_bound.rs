//! Depth-first branch and bound over vertex labels.
//!
//! Vertices are labeled in id order `0..n`, labels tried in increasing
//! encoded order, so leaves are reached in lexicographic order. A subtree is
//! cut when
//!
//! * an empty-labeled vertex has no unlabeled neighbor left and still misses
//!   a color,
//! * the current weight plus a coverage-deficiency bound cannot beat the
//!   incumbent, or
//! * (regular graphs) the incumbent already meets `⌈kn / (k + K)⌉`.
//!
//! The deficiency bound: every unsatisfied vertex `v` still needs `need(v)`
//! colors. One unit of weight on an unlabeled vertex `u` can settle `u`'s own
//! need and add one color to each neighbor, so the first unit is worth
//! `need(u) + d(u)` and every further unit `d(u)`, where `d(u)` counts
//! unsatisfied neighbors. Taking the most valuable units first until the
//! total need is covered gives a lower bound on the weight still to place.
//!
//! Only strictly better leaves replace the incumbent, so the search returns
//! the lexicographically smallest optimum.

use alloc::vec;
use alloc::vec::Vec;

use super::{Budget, Clock, Method, SearchLimits, SolverResult, SolverStats};
use crate::assignment::RainbowAssignment;
use crate::error::Result;
use crate::graph::Graph;

/// All optima of an instance, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub optimum: u32,
    pub assignments: Vec<RainbowAssignment>,
    /// The enumeration cap was reached before the search finished.
    pub truncated: bool,
    /// False when a node or time budget ran out; the list is then partial and
    /// `optimum` may not be minimal.
    pub exact: bool,
    pub stats: SolverStats,
}

/// Exact `γ_rk(g)` unless a budget in `limits` runs out, in which case the
/// best labeling found so far is returned with `exact == false`.
pub fn solve_branch_bound(
    g: &Graph,
    colors: u8,
    limits: &SearchLimits,
    clock: &dyn Clock,
) -> Result<SolverResult> {
    RainbowAssignment::empty(colors, 0)?;
    let mut budget = Budget::new(*limits, clock);
    let greedy = greedy_labels(g, colors);
    let greedy_weight: u32 = greedy.iter().map(|l| l.count_ones()).sum();

    let mut search = Search::new(g, colors, Goal::Minimize { bound: greedy_weight + 1 });
    search.run(&mut budget);

    let labels = search.best.unwrap_or(greedy);
    let witness = RainbowAssignment::from_bits_unchecked(colors, &labels);
    let exact = !budget.exhausted();
    Ok(SolverResult::new(g, Method::BranchBound, witness, budget.stats(), exact))
}

/// Every kRDF of minimum weight, lexicographically ordered, up to
/// `limits.enumeration_cap`.
pub fn enumerate_optima(
    g: &Graph,
    colors: u8,
    limits: &SearchLimits,
    clock: &dyn Clock,
) -> Result<Enumeration> {
    let best = solve_branch_bound(g, colors, limits, clock)?;
    let mut budget = Budget::new(*limits, clock);
    budget.nodes = best.stats.nodes;
    let mut search = Search::new(
        g,
        colors,
        Goal::Enumerate { target: best.optimum, cap: limits.enumeration_cap, found: Vec::new() },
    );
    if best.exact {
        search.run(&mut budget);
    }
    let Goal::Enumerate { found, cap, .. } = search.goal else { unreachable!() };
    let truncated = cap.is_some_and(|c| found.len() >= c) && search.stopped;
    Ok(Enumeration {
        optimum: best.optimum,
        assignments: found
            .iter()
            .map(|l| RainbowAssignment::from_bits_unchecked(colors, l))
            .collect(),
        truncated,
        exact: best.exact && !budget.exhausted(),
        stats: budget.stats(),
    })
}

enum Goal {
    /// Find a labeling of weight `< bound`, tightening `bound` on success.
    Minimize { bound: u32 },
    /// Collect every labeling of weight exactly `target`.
    Enumerate { target: u32, cap: Option<usize>, found: Vec<Vec<u8>> },
}

struct Search {
    neighbors: Vec<Vec<usize>>,
    full: u8,
    colors: u8,
    labels: Vec<u8>,
    /// Union of the labels of already-labeled neighbors.
    seen: Vec<u8>,
    /// Number of still-unlabeled neighbors.
    open: Vec<u32>,
    /// Weight at which the search may stop early (regular graphs only).
    proven_floor: u32,
    goal: Goal,
    best: Option<Vec<u8>>,
    stopped: bool,
    need: Vec<u8>,
    buckets: Vec<u32>,
}

impl Search {
    fn new(g: &Graph, colors: u8, goal: Goal) -> Self {
        let n = g.vertex_count();
        let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
        let open = neighbors.iter().map(|nb| nb.len() as u32).collect();
        let max_degree = neighbors.iter().map(Vec::len).max().unwrap_or(0);
        let proven_floor = g.regular_degree().map_or(0, |deg| {
            let k = colors as usize;
            (k * n).div_ceil(k + deg) as u32
        });
        Search {
            neighbors,
            full: (1u16 << colors) as u8 - 1,
            colors,
            labels: vec![0; n],
            seen: vec![0; n],
            open,
            proven_floor,
            goal,
            best: None,
            stopped: false,
            need: vec![0; n],
            buckets: vec![0; colors as usize + max_degree + 1],
        }
    }

    fn run(&mut self, budget: &mut Budget<'_>) {
        self.descend(0, 0, budget);
    }

    fn descend(&mut self, vertex: usize, weight: u32, budget: &mut Budget<'_>) {
        if !budget.tick() {
            self.stopped = true;
            return;
        }
        let n = self.labels.len();
        if vertex == n {
            self.record(weight);
            return;
        }
        let remaining = self.lower_bound(vertex);
        if remaining == u32::MAX || !self.admits(weight + remaining) {
            return;
        }

        for label in 0..=self.full {
            let w = weight + label.count_ones();
            if !self.admits(w) {
                continue;
            }
            if self.assign(vertex, label) {
                self.descend(vertex + 1, w, budget);
            }
            self.unassign(vertex, label);
            if self.stopped {
                return;
            }
        }
    }

    /// Whether a completion of total weight `w` is still of interest.
    fn admits(&self, w: u32) -> bool {
        match &self.goal {
            Goal::Minimize { bound } => w < *bound,
            Goal::Enumerate { target, .. } => w <= *target,
        }
    }

    fn record(&mut self, weight: u32) {
        match &mut self.goal {
            Goal::Minimize { bound } => {
                *bound = weight;
                self.best = Some(self.labels.clone());
                if weight <= self.proven_floor {
                    self.stopped = true;
                }
            }
            Goal::Enumerate { target, cap, found } => {
                if weight == *target {
                    found.push(self.labels.clone());
                    if cap.is_some_and(|c| found.len() >= c) {
                        self.stopped = true;
                    }
                }
            }
        }
    }

    /// Labels `vertex`; returns false if some empty vertex is now closed off
    /// while still missing a color.
    fn assign(&mut self, vertex: usize, label: u8) -> bool {
        self.labels[vertex] = label;
        let mut ok = label != 0 || self.open[vertex] > 0 || self.seen[vertex] == self.full;
        for &u in &self.neighbors[vertex] {
            self.seen[u] |= label;
            self.open[u] -= 1;
            if u < vertex && self.labels[u] == 0 && self.open[u] == 0 && self.seen[u] != self.full {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, vertex: usize, label: u8) {
        self.labels[vertex] = 0;
        if label == 0 {
            for &u in &self.neighbors[vertex] {
                self.open[u] += 1;
            }
            return;
        }
        for i in 0..self.neighbors[vertex].len() {
            let u = self.neighbors[vertex][i];
            self.open[u] += 1;
            self.seen[u] = self.neighbors[u]
                .iter()
                .filter(|&&x| x < vertex)
                .fold(0, |acc, &x| acc | self.labels[x]);
        }
    }

    /// Lower bound on the weight of vertices `first..n`, or `u32::MAX` if the
    /// remaining demand cannot be met at all.
    fn lower_bound(&mut self, first: usize) -> u32 {
        let mut total = 0u32;
        for v in 0..self.labels.len() {
            let need = if v < first && self.labels[v] != 0 {
                0
            } else {
                (self.full & !self.seen[v]).count_ones() as u8
            };
            self.need[v] = need;
            total += need as u32;
        }
        if total == 0 {
            return 0;
        }

        self.buckets.fill(0);
        for u in first..self.labels.len() {
            let d = self.neighbors[u].iter().filter(|&&v| self.need[v] > 0).count();
            self.buckets[self.need[u] as usize + d] += 1;
            self.buckets[d] += self.colors as u32 - 1;
        }
        let mut units = 0u32;
        let mut covered = 0u32;
        for profit in (1..self.buckets.len()).rev() {
            let available = self.buckets[profit];
            if available == 0 {
                continue;
            }
            let missing = total - covered;
            let take = missing.div_ceil(profit as u32).min(available);
            units += take;
            covered += take * profit as u32;
            if covered >= total {
                return units;
            }
        }
        u32::MAX
    }
}

/// Repeatedly gives an empty vertex the label that settles the most missing
/// colors per unit of weight, until the labeling is a kRDF.
fn greedy_labels(g: &Graph, colors: u8) -> Vec<u8> {
    let n = g.vertex_count();
    let full = (1u16 << colors) as u8 - 1;
    let mut labels = vec![0u8; n];
    let missing = |labels: &[u8], v: usize| -> u8 {
        if labels[v] != 0 {
            return 0;
        }
        full & !g.neighbors(v).iter().fold(0, |acc, &u| acc | labels[u])
    };
    loop {
        let mut choice: Option<(u32, u32, usize, u8)> = None;
        for u in (0..n).filter(|&u| labels[u] == 0) {
            let own = missing(&labels, u).count_ones();
            for label in 1..=full {
                let gain = own
                    + g.neighbors(u)
                        .iter()
                        .map(|&v| (missing(&labels, v) & label).count_ones())
                        .sum::<u32>();
                let cost = label.count_ones();
                let better = match choice {
                    None => gain > 0,
                    Some((bg, bc, _, _)) => gain * bc > bg * cost,
                };
                if better {
                    choice = Some((gain, cost, u, label));
                }
            }
        }
        match choice {
            Some((_, _, u, label)) => labels[u] = label,
            None => return labels,
        }
    }
}
