//! Sliding-window dynamic programming for `γ_r2(C(n; {1, s}))`.
//!
//! Vertices are placed around the ring in order. The window holds the last
//! `s` placed vertices; each window cell is either a nonempty label or an
//! empty label together with its *residual demand*: the colors it has not yet
//! seen. That gives 7 cell values (`∅` with 4 possible residuals, plus 3
//! nonempty labels) and at most `7^s` windows.
//!
//! Placing label `L` at position `p`:
//!
//! * the oldest cell (`p - s`) loses `L` from its residual and leaves the
//!   window; its last neighbor has now been placed, so the residual must be
//!   empty,
//! * the newest cell (`p - 1`) loses `L` from its residual,
//! * if `L = ∅` the new cell's residual is `{1, 2}` minus the labels of
//!   `p - 1` and `p - s`; otherwise it stores `L`.
//!
//! Cyclic closure: a labeling of the ring is exactly a closed walk of length
//! `n` in this transition system. The walk starts from the window describing
//! positions `n - s .. n` (the boundary seed) and must return to the same
//! window, so that the demands deferred across the cut are discharged exactly.
//! Rotating and swapping colors preserve optimality, so only seeds whose
//! newest cell holds `{1}` or `{1, 2}` are needed, and only windows that occur
//! on arbitrarily long walks are kept.
//!
//! The witness is the lexicographically smallest rotation/color swap of the
//! first optimum found (seeds in increasing window order).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::{Method, SolverResult, SolverStats};
use crate::assignment::RainbowAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

const CELLS: usize = 7;
const NONE: u32 = u32::MAX;
const MAX_JUMP: usize = 6;

/// Cell codes 0..=3: empty label with that residual; 4..=6: label code - 3.
fn cell_label(code: usize) -> u8 {
    if code < 4 {
        0
    } else {
        (code - 3) as u8
    }
}

fn cell_residual(code: usize) -> u8 {
    if code < 4 {
        code as u8
    } else {
        0
    }
}

/// Precomputed transition system for one jump length `s`.
#[derive(Debug, Clone)]
pub struct TransferDp {
    jump: usize,
    /// `next[state * 4 + label]`, or `NONE` if the oldest cell would leave
    /// with an unmet demand.
    next: Vec<u32>,
    /// Label of the newest cell of each state.
    newest: Vec<u8>,
    seeds: Vec<u32>,
}

impl TransferDp {
    /// Builds the transition system for `C(n; {1, jump})`, `2 <= jump <= 6`.
    pub fn new(jump: usize) -> Result<Self> {
        if !(2..=MAX_JUMP).contains(&jump) {
            return Err(Error::UnsupportedGraph(format!(
                "transfer DP handles C(n; {{1, s}}) with 2 <= s <= {MAX_JUMP}, got s = {jump}"
            )));
        }
        let total = CELLS.pow(jump as u32);
        let top = CELLS.pow(jump as u32 - 1);

        let mut full_next = vec![NONE; total * 4];
        for state in 0..total {
            let oldest = state % CELLS;
            let newest = state / top;
            for label in 0..4u8 {
                if cell_residual(oldest) & !label != 0 {
                    continue;
                }
                let discharged = if newest < 4 { (newest as u8 & !label) as usize } else { newest };
                let entering = if label == 0 {
                    (3 & !(cell_label(newest) | cell_label(oldest))) as usize
                } else {
                    label as usize + 3
                };
                let middle = state / CELLS % (top / CELLS);
                let next = middle + discharged * (top / CELLS) + entering * top;
                full_next[state * 4 + label as usize] = next as u32;
            }
        }
        // keep only windows that occur on arbitrarily long walks
        let mut alive = vec![true; total];
        loop {
            let mut reached = vec![false; total];
            for state in (0..total).filter(|&s| alive[s]) {
                for &t in &full_next[state * 4..state * 4 + 4] {
                    if t != NONE {
                        reached[t as usize] = true;
                    }
                }
            }
            if reached == alive {
                break;
            }
            alive = reached;
        }

        let mut compact = vec![NONE; total];
        let mut order = Vec::new();
        for state in (0..total).filter(|&s| alive[s]) {
            compact[state] = order.len() as u32;
            order.push(state);
        }
        let mut next = Vec::with_capacity(order.len() * 4);
        for &state in &order {
            for &t in &full_next[state * 4..state * 4 + 4] {
                next.push(if t == NONE { NONE } else { compact[t as usize] });
            }
        }
        let newest: Vec<u8> = order.iter().map(|&s| cell_label(s / top)).collect();
        let seeds =
            (0..order.len() as u32).filter(|&c| matches!(newest[c as usize], 1 | 3)).collect();
        Ok(TransferDp { jump, next, newest, seeds })
    }

    pub fn jump(&self) -> usize {
        self.jump
    }

    /// Number of windows kept after pruning.
    pub fn state_count(&self) -> usize {
        self.newest.len()
    }

    pub fn seed_count(&self) -> usize {
        self.seeds.len()
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n < 2 * self.jump + 1 {
            return Err(Error::UnsupportedGraph(format!(
                "transfer DP needs n >= {} for jump {}, got n = {n}",
                2 * self.jump + 1,
                self.jump
            )));
        }
        Ok(())
    }

    /// `γ_r2(C(n; {1, s}))` with a witness.
    pub fn solve(&self, n: usize) -> Result<SolverResult> {
        self.check_n(n)?;
        let mut out = self.run(n, n, true);
        Ok(out.pop().expect("one result per n"))
    }

    /// Solves every `n` in `range` with one pass per seed; results are in
    /// increasing `n`.
    pub fn sweep(&self, range: RangeInclusive<usize>) -> Result<Vec<SolverResult>> {
        let (lo, hi) = (*range.start(), *range.end());
        if lo > hi {
            return Ok(Vec::new());
        }
        self.check_n(lo)?;
        Ok(self.run(lo, hi, false))
    }

    fn run(&self, lo: usize, hi: usize, prune: bool) -> Vec<SolverResult> {
        let states = self.state_count();
        let mut best: Vec<Option<(u32, Vec<u8>)>> = vec![None; hi - lo + 1];
        let mut cost = vec![u32::MAX; states];
        let mut fresh = vec![u32::MAX; states];
        let mut pred = vec![NONE; hi * states];
        let mut active: Vec<u32> = Vec::with_capacity(states);
        let mut following: Vec<u32> = Vec::with_capacity(states);
        let mut updates = 0u64;

        for &seed in &self.seeds {
            active.clear();
            active.push(seed);
            cost[seed as usize] = 0;
            for step in 1..=hi {
                let bound =
                    if prune { best[0].as_ref().map_or(u32::MAX, |b| b.0) } else { u32::MAX };
                let row = &mut pred[(step - 1) * states..step * states];
                following.clear();
                for &st in &active {
                    let c = cost[st as usize];
                    let base = st as usize * 4;
                    for label in 0..4usize {
                        let t = self.next[base + label];
                        if t == NONE {
                            continue;
                        }
                        let nc = c + (label as u32).count_ones();
                        if nc >= bound {
                            continue;
                        }
                        updates += 1;
                        let slot = &mut fresh[t as usize];
                        if *slot == u32::MAX {
                            following.push(t);
                        }
                        if nc < *slot {
                            *slot = nc;
                            row[t as usize] = st;
                        }
                    }
                }
                for &st in &active {
                    cost[st as usize] = u32::MAX;
                }
                core::mem::swap(&mut cost, &mut fresh);
                core::mem::swap(&mut active, &mut following);
                active.sort_unstable();

                if step >= lo {
                    let closing = cost[seed as usize];
                    let slot = &mut best[step - lo];
                    if closing != u32::MAX && slot.as_ref().is_none_or(|b| closing < b.0) {
                        *slot = Some((closing, self.reconstruct(&pred, seed, step)));
                    }
                }
                if active.is_empty() {
                    break;
                }
            }
            for &st in &active {
                cost[st as usize] = u32::MAX;
            }
        }

        best.into_iter()
            .enumerate()
            .map(|(i, b)| {
                let n = lo + i;
                let (_, labels) = b.expect("a closed walk exists for every n >= 2s + 1");
                let witness = RainbowAssignment::from_bits_unchecked(2, &canonical_form(&labels));
                let g = Graph::circulant(n, &[1, self.jump]).expect("valid circulant");
                let stats = SolverStats { nodes: updates, ..SolverStats::default() };
                SolverResult::new(&g, Method::TransferDp, witness, stats, true)
            })
            .collect()
    }

    fn reconstruct(&self, pred: &[u32], seed: u32, steps: usize) -> Vec<u8> {
        let states = self.state_count();
        let mut labels = vec![0u8; steps];
        let mut st = seed;
        for step in (1..=steps).rev() {
            labels[step - 1] = self.newest[st as usize];
            st = pred[(step - 1) * states + st as usize];
        }
        debug_assert_eq!(st, seed);
        labels
    }
}

/// Lexicographically smallest image under rotation and the color swap.
fn canonical_form(labels: &[u8]) -> Vec<u8> {
    let n = labels.len();
    let swapped: Vec<u8> = labels.iter().map(|&l| (l >> 1) | ((l & 1) << 1)).collect();
    let mut best = labels.to_vec();
    for source in [labels, &swapped[..]] {
        for r in 0..n {
            let candidate = source[r..].iter().chain(&source[..r]);
            if candidate.clone().lt(best.iter()) {
                best = candidate.copied().collect();
            }
        }
    }
    best
}

/// `γ_r2(C(n; {1, jump}))` by the transfer DP. Only `colors == 2` is handled.
pub fn solve_transfer_dp(n: usize, jump: usize, colors: u8) -> Result<SolverResult> {
    if colors != 2 {
        return Err(Error::UnsupportedParameters(format!(
            "transfer DP handles k = 2 only, got k = {colors}"
        )));
    }
    TransferDp::new(jump)?.solve(n)
}

/// Dispatches on the graph's family tag; it must be `C(n; {1, s})`.
pub fn solve_transfer_dp_for(g: &Graph, colors: u8) -> Result<SolverResult> {
    let (n, jump) = g.family().one_jump_circulant().ok_or_else(|| {
        Error::UnsupportedGraph(format!("transfer DP needs C(n; {{1, s}}), got {}", g.family()))
    })?;
    solve_transfer_dp(n, jump, colors)
}
