//! β statistics over every optimal 2RDF of `C(n; {1, 4})`.

use std::collections::BTreeMap;

use serde::Serialize;

use rainbow_core::rdf::beta_audit;
use rainbow_core::solvers::{enumerate_optima, Clock, DEFAULT_GUARD};
use rainbow_core::{Error, Graph, Result, SearchLimits};

/// What the minimum β is checked against, by `n mod 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BetaRequirement {
    /// Every optimum has `β >= min`.
    AtLeast { min: i64 },
    /// Some optimum has `β = 0`.
    ZeroAchieved,
}

impl BetaRequirement {
    pub fn for_n(n: u64) -> Self {
        match n % 6 {
            0 => BetaRequirement::ZeroAchieved,
            4 => BetaRequirement::AtLeast { min: 12 },
            _ => BetaRequirement::AtLeast { min: 6 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaReport {
    pub n: u64,
    pub residue: u64,
    pub optimum: u32,
    pub optima: usize,
    /// The enumeration cap stopped the listing early.
    pub truncated: bool,
    pub exact: bool,
    /// `6 w(f) = 2n + β` for every enumerated optimum.
    pub identity_holds: bool,
    pub min_beta: i64,
    pub max_beta: i64,
    /// Number of optima per β value.
    pub beta_histogram: BTreeMap<i64, usize>,
    /// First optimum (lexicographically) attaining `min_beta`.
    pub min_beta_witness: String,
    pub requirement: BetaRequirement,
    pub requirement_met: bool,
}

/// Enumerates all optima of `C(n; {1, 4})` and audits each one.
///
/// Refuses `2n > 26` unless `guard` is `None` (or larger).
pub fn beta_report(
    n: u64,
    guard: Option<usize>,
    limits: &SearchLimits,
    clock: &dyn Clock,
) -> Result<BetaReport> {
    if n < 9 {
        return Err(Error::OutOfDomain { what: "beta report n", value: n, min: 9 });
    }
    if let Some(limit) = guard {
        if 2 * n as usize > limit {
            return Err(Error::InstanceTooLarge { vertices: n as usize, colors: 2, limit });
        }
    }
    let g = Graph::circulant(n as usize, &[1, 4])?;
    let all = enumerate_optima(&g, 2, limits, clock)?;

    let mut identity_holds = true;
    let mut histogram = BTreeMap::new();
    let mut min: Option<(i64, String)> = None;
    for f in &all.assignments {
        let audit = beta_audit(&g, f)?;
        identity_holds &= audit.identity_holds();
        *histogram.entry(audit.beta).or_insert(0) += 1;
        if min.as_ref().is_none_or(|(b, _)| audit.beta < *b) {
            min = Some((audit.beta, f.format()));
        }
    }
    let (min_beta, min_beta_witness) = min.unwrap_or((0, String::new()));
    let max_beta = histogram.keys().next_back().copied().unwrap_or(0);

    let requirement = BetaRequirement::for_n(n);
    let requirement_met = !all.assignments.is_empty()
        && match requirement {
            BetaRequirement::AtLeast { min } => min_beta >= min,
            BetaRequirement::ZeroAchieved => min_beta == 0,
        };

    Ok(BetaReport {
        n,
        residue: n % 6,
        optimum: all.optimum,
        optima: all.assignments.len(),
        truncated: all.truncated,
        exact: all.exact,
        identity_holds,
        min_beta,
        max_beta,
        beta_histogram: histogram,
        min_beta_witness,
        requirement,
        requirement_met,
    })
}

/// Guard used when the caller does not override it.
pub const BETA_GUARD: Option<usize> = Some(DEFAULT_GUARD);
