//! Exhaustive search over all `(2^k)^n` labelings.
//!
//! Labelings are visited in lexicographic order (vertex 0 most significant,
//! labels as encoded integers). A labeling is only validated when its weight
//! beats the best found so far, and a prefix whose weight already reaches the
//! best is skipped along with all its completions. The first labeling of
//! minimum weight in that order is returned.

use alloc::vec;
use alloc::vec::Vec;

use super::{Method, SolverResult, SolverStats};
use crate::assignment::RainbowAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on `vertices * colors`.
pub const DEFAULT_GUARD: usize = 26;

/// Exhaustive optimum, refusing instances with `n * k > 26`.
pub fn solve_bruteforce(g: &Graph, colors: u8) -> Result<SolverResult> {
    solve_bruteforce_with_guard(g, colors, Some(DEFAULT_GUARD))
}

/// Exhaustive optimum with a custom `n * k` guard (`None` disables it).
pub fn solve_bruteforce_with_guard(
    g: &Graph,
    colors: u8,
    guard: Option<usize>,
) -> Result<SolverResult> {
    // validates the color count
    RainbowAssignment::empty(colors, 0)?;
    let n = g.vertex_count();
    if let Some(limit) = guard {
        if n * colors as usize > limit {
            return Err(Error::InstanceTooLarge { vertices: n, colors, limit });
        }
    }

    let mut search = Search {
        neighbors: (0..n).map(|v| g.neighbors(v).to_vec()).collect(),
        full: (1u16 << colors) as u8 - 1,
        labels: vec![0; n],
        best_weight: u32::MAX,
        best: Vec::new(),
        leaves: 0,
    };
    search.descend(0, 0);

    let witness = RainbowAssignment::from_bits_unchecked(colors, &search.best);
    let stats = SolverStats { nodes: search.leaves, ..SolverStats::default() };
    Ok(SolverResult::new(g, Method::Brute, witness, stats, true))
}

struct Search {
    neighbors: Vec<Vec<usize>>,
    full: u8,
    labels: Vec<u8>,
    best_weight: u32,
    best: Vec<u8>,
    leaves: u64,
}

impl Search {
    fn descend(&mut self, vertex: usize, weight: u32) {
        if weight >= self.best_weight {
            return;
        }
        if vertex == self.labels.len() {
            self.leaves += 1;
            if self.is_rdf() {
                self.best_weight = weight;
                self.best.clone_from(&self.labels);
            }
            return;
        }
        for label in 0..=self.full {
            self.labels[vertex] = label;
            self.descend(vertex + 1, weight + label.count_ones());
        }
        self.labels[vertex] = 0;
    }

    fn is_rdf(&self) -> bool {
        self.labels.iter().enumerate().all(|(v, &l)| {
            l != 0 || self.neighbors[v].iter().fold(0, |acc, &u| acc | self.labels[u]) == self.full
        })
    }
}
