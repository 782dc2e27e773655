//! Exact value of `γ_r2(P(10, 2))`, checked against the two closed forms that
//! cover it and disagree: the `P(n, 2)` formula gives 8, the listed `P(5k, k)`
//! value for `k = 2` is 10.

use serde::Serialize;

use rainbow_core::formulas::{gamma_r2_p5kk, gamma_r2_pn2};
use rainbow_core::rdf::is_krdf;
use rainbow_core::solvers::{solve_branch_bound, Clock};
use rainbow_core::{Graph, Result, SearchLimits};

use crate::report::SolverJson;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub source: String,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Adjudication {
    pub graph: String,
    pub candidates: Vec<Candidate>,
    /// The candidates disagree with each other.
    pub discrepancy: bool,
    pub result: SolverJson,
    pub witness_valid: bool,
    /// Sources whose value equals the exact optimum; empty when inconclusive.
    pub matches: Vec<String>,
    /// `matches:<source>`, `matches-none` or `inconclusive`.
    pub verdict: String,
}

impl Adjudication {
    pub fn conclusive(&self) -> bool {
        self.result.exact
    }
}

pub fn adjudicate_p10_2(limits: &SearchLimits, clock: &dyn Clock) -> Result<Adjudication> {
    let g = Graph::generalized_petersen(10, 2)?;
    let listed = gamma_r2_p5kk(2)?;
    let candidates = vec![
        Candidate { source: "gamma_r2_pn2(10)".into(), value: gamma_r2_pn2(10)? },
        Candidate { source: "gamma_r2_p5kk(2)".into(), value: listed.upper },
    ];
    let discrepancy = candidates[0].value != candidates[1].value;

    let solved = solve_branch_bound(&g, 2, limits, clock)?;
    let matches: Vec<String> = if solved.exact {
        candidates
            .iter()
            .filter(|c| c.value == u64::from(solved.optimum))
            .map(|c| c.source.clone())
            .collect()
    } else {
        Vec::new()
    };
    let verdict = if !solved.exact {
        "inconclusive".to_string()
    } else if matches.is_empty() {
        "matches-none".to_string()
    } else {
        format!("matches:{}", matches.join(","))
    };

    Ok(Adjudication {
        graph: g.family().to_string(),
        candidates,
        discrepancy,
        witness_valid: is_krdf(&g, &solved.witness),
        result: SolverJson::from(&solved),
        matches,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::solvers::NoClock;

    #[test]
    fn reports_both_candidates_and_a_verdict() {
        let a = adjudicate_p10_2(&SearchLimits::UNLIMITED, &NoClock).unwrap();
        assert_eq!(a.graph, "petersen:10:2");
        let values: Vec<_> = a.candidates.iter().map(|c| c.value).collect();
        assert_eq!(values, [8, 10]);
        assert!(a.discrepancy);
        assert!(a.conclusive() && a.witness_valid);
        assert_eq!(a.result.witness.len(), 20);
        // exact search on the 20-vertex graph finds weight 8
        assert_eq!(a.result.optimum, 8);
        assert_eq!(a.verdict, "matches:gamma_r2_pn2(10)");
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let limits = SearchLimits { node_budget: Some(10), ..SearchLimits::UNLIMITED };
        let a = adjudicate_p10_2(&limits, &NoClock).unwrap();
        assert!(!a.conclusive());
        assert_eq!(a.verdict, "inconclusive");
        assert!(a.matches.is_empty());
    }
}
