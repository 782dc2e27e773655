//! The k-rainbow domination condition and the class-count audit.
//!
//! An assignment `f` is a kRDF of `G` when every vertex labeled `∅` sees all
//! `k` colors across its open neighborhood.

use alloc::format;
use alloc::vec::Vec;

use crate::assignment::{ColorSet, RainbowAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An empty-labeled vertex and the colors its neighborhood fails to supply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub missing: ColorSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// `w(f)`.
pub fn weight(f: &RainbowAssignment) -> u32 {
    f.weight()
}

fn check_len(g: &Graph, f: &RainbowAssignment) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::invalid(format!(
            "assignment has {} labels for {} vertices",
            f.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Checks the kRDF condition and lists every violation in vertex order.
pub fn validate_krdf(g: &Graph, f: &RainbowAssignment) -> Result<ValidationReport> {
    check_len(g, f)?;
    let full = ColorSet::full(f.colors());
    let violations: Vec<Violation> = (0..g.vertex_count())
        .filter(|&v| f.label(v).is_empty())
        .filter_map(|v| {
            let seen = g.neighbors(v).iter().fold(ColorSet::EMPTY, |acc, &u| acc.union(f.label(u)));
            let missing = full.difference(seen);
            (!missing.is_empty()).then_some(Violation { vertex: v, missing })
        })
        .collect();
    Ok(ValidationReport { valid: violations.is_empty(), violations })
}

/// Shorthand for `validate_krdf(..).valid` that treats a length mismatch as
/// invalid.
pub fn is_krdf(g: &Graph, f: &RainbowAssignment) -> bool {
    validate_krdf(g, f).map(|r| r.valid).unwrap_or(false)
}

/// Class counts of a 2-color assignment on a 4-regular graph.
///
/// `V0`, `V1`, `V2` hold the vertices labeled `∅`, a singleton and `{1, 2}`.
/// `vij[i][j]` counts empty vertices with exactly `i` neighbors in `V1` and
/// `j` neighbors in `V2` (only `i + j <= 4` can be nonzero). `e1`, `e2`,
/// `e12` count edges inside `V1`, inside `V2` and between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaAudit {
    pub n: usize,
    pub weight: u32,
    pub v0: usize,
    pub v1: usize,
    pub v2: usize,
    pub vij: [[usize; 5]; 5],
    pub e1: usize,
    pub e2: usize,
    pub e12: usize,
    pub beta: i64,
    /// Edges between `V1` and `V0`, counted from the `V1` side: `4|V1| - 2|E1| - |E12|`.
    pub eq1_lhs: i64,
    /// The same edges counted from the `V0` side: `Σ i·|V_ij|`.
    pub eq1_rhs: i64,
    /// `4|V2| - 2|E2| - |E12|`.
    pub eq2_lhs: i64,
    /// `Σ j·|V_ij|`.
    pub eq2_rhs: i64,
}

impl BetaAudit {
    /// `6 w(f) = 2n + β`.
    pub fn identity_holds(&self) -> bool {
        6 * i64::from(self.weight) == 2 * self.n as i64 + self.beta
    }

    pub fn equations_hold(&self) -> bool {
        self.eq1_lhs == self.eq1_rhs && self.eq2_lhs == self.eq2_rhs
    }

    /// Recomputes β from the stored counts.
    pub fn beta_from_counts(&self) -> i64 {
        let v = |i: usize, j: usize| self.vij[i][j] as i64;
        v(1, 1)
            + 3 * v(1, 2)
            + 5 * v(1, 3)
            + 2 * v(2, 1)
            + 4 * v(2, 2)
            + v(3, 0)
            + 3 * v(3, 1)
            + 2 * v(4, 0)
            + 2 * v(0, 2)
            + 4 * v(0, 3)
            + 6 * v(0, 4)
            + 3 * self.e12 as i64
            + 2 * self.e1 as i64
            + 4 * self.e2 as i64
            + 2 * self.v2 as i64
    }
}

/// Computes the class counts and β for a 2-color assignment on a 4-regular
/// graph. Invalid assignments are audited too; the identity may then fail.
pub fn beta_audit(g: &Graph, f: &RainbowAssignment) -> Result<BetaAudit> {
    if g.regular_degree() != Some(4) {
        return Err(Error::UnsupportedGraph("the audit needs a 4-regular graph".into()));
    }
    if f.colors() != 2 {
        return Err(Error::UnsupportedParameters(format!(
            "the audit needs k = 2, got k = {}",
            f.colors()
        )));
    }
    check_len(g, f)?;

    let class = |v: usize| f.label(v).len() as usize;
    let (mut v0, mut v1, mut v2) = (0, 0, 0);
    let mut vij = [[0usize; 5]; 5];
    for v in 0..g.vertex_count() {
        match class(v) {
            0 => {
                v0 += 1;
                let (mut i, mut j) = (0, 0);
                for &u in g.neighbors(v) {
                    match class(u) {
                        1 => i += 1,
                        2 => j += 1,
                        _ => {}
                    }
                }
                vij[i][j] += 1;
            }
            1 => v1 += 1,
            _ => v2 += 1,
        }
    }
    let (mut e1, mut e2, mut e12) = (0, 0, 0);
    for (u, v) in g.edges() {
        match (class(u), class(v)) {
            (1, 1) => e1 += 1,
            (2, 2) => e2 += 1,
            (1, 2) | (2, 1) => e12 += 1,
            _ => {}
        }
    }

    let mut eq1_rhs = 0i64;
    let mut eq2_rhs = 0i64;
    for (i, row) in vij.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            eq1_rhs += (i * count) as i64;
            eq2_rhs += (j * count) as i64;
        }
    }

    let mut audit = BetaAudit {
        n: g.vertex_count(),
        weight: f.weight(),
        v0,
        v1,
        v2,
        vij,
        e1,
        e2,
        e12,
        beta: 0,
        eq1_lhs: 4 * v1 as i64 - 2 * e1 as i64 - e12 as i64,
        eq1_rhs,
        eq2_lhs: 4 * v2 as i64 - 2 * e2 as i64 - e12 as i64,
        eq2_rhs,
    };
    audit.beta = audit.beta_from_counts();
    Ok(audit)
}
