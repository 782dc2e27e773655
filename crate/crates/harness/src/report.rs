//! JSON shapes of everything the tool prints.

use serde::Serialize;

use rainbow_core::formulas::{BoundResult, C14FormulaValue};
use rainbow_core::{BetaAudit, Error, RainbowAssignment, SolverResult, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaJson {
    pub n: u64,
    pub residue: u64,
    pub alpha: u64,
    pub value: u64,
}

impl From<C14FormulaValue> for FormulaJson {
    fn from(v: C14FormulaValue) -> Self {
        FormulaJson { n: v.n, residue: v.residue, alpha: v.alpha, value: v.value }
    }
}

/// A plain closed-form value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueJson {
    pub n: u64,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
}

impl From<BoundResult> for BoundJson {
    fn from(b: BoundResult) -> Self {
        BoundJson { lower: b.lower, upper: b.upper, exact: b.is_exact() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverJson {
    pub method: String,
    pub optimum: u32,
    pub witness: String,
    pub nodes: u64,
    pub elapsed_ms: u64,
    pub exact: bool,
}

impl From<&SolverResult> for SolverJson {
    fn from(r: &SolverResult) -> Self {
        SolverJson {
            method: r.method.as_str().to_string(),
            optimum: r.optimum,
            witness: r.witness.format(),
            nodes: r.stats.nodes,
            elapsed_ms: r.stats.elapsed.as_millis() as u64,
            exact: r.exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationJson {
    pub vertex: usize,
    pub missing: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationJson {
    pub valid: bool,
    pub weight: u32,
    pub violations: Vec<ViolationJson>,
}

impl ValidationJson {
    pub fn new(report: &ValidationReport, f: &RainbowAssignment) -> Self {
        ValidationJson {
            valid: report.valid,
            weight: f.weight(),
            violations: report
                .violations
                .iter()
                .map(|v| ViolationJson { vertex: v.vertex, missing: v.missing.to_string() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditJson {
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
    pub identity_holds: bool,
    pub equations_hold: bool,
}

impl From<&BetaAudit> for AuditJson {
    fn from(a: &BetaAudit) -> Self {
        AuditJson {
            n: a.n,
            weight: a.weight,
            v0: a.v0,
            v1: a.v1,
            v2: a.v2,
            vij: a.vij,
            e1: a.e1,
            e2: a.e2,
            e12: a.e12,
            beta: a.beta,
            identity_holds: a.identity_holds(),
            equations_hold: a.equations_hold(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionJson {
    pub n: u64,
    pub assignment: String,
    pub weight: u32,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
}

impl From<&Error> for ErrorJson {
    fn from(e: &Error) -> Self {
        ErrorJson { error: e.kind().to_string(), message: e.to_string() }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}
