//! Timing of the transfer DP on `C(n; {1, 4})`.

use std::time::Instant;

use serde::Serialize;

use rainbow_core::solvers::TransferDp;
use rainbow_core::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: u64,
    pub optimum: u32,
    /// DP state updates.
    pub states: u64,
    pub elapsed_ms: f64,
    pub states_per_sec: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub family: String,
    pub window_states: usize,
    pub seeds: usize,
    pub setup_ms: f64,
    pub rows: Vec<BenchRow>,
    pub total_ms: f64,
}

/// Solves every `n` in `from..=to` separately and times each solve.
pub fn bench_c14(from: u64, to: u64) -> Result<BenchReport> {
    if from < 9 {
        return Err(Error::OutOfDomain { what: "bench range start", value: from, min: 9 });
    }
    if to < from {
        return Err(Error::InvalidParameter(format!("empty range {from}..={to}")));
    }
    let start = Instant::now();
    let dp = TransferDp::new(4)?;
    let setup_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut rows = Vec::new();
    for n in from..=to {
        let t = Instant::now();
        let r = dp.solve(n as usize)?;
        let secs = t.elapsed().as_secs_f64();
        rows.push(BenchRow {
            n,
            optimum: r.optimum,
            states: r.stats.nodes,
            elapsed_ms: secs * 1e3,
            states_per_sec: if secs > 0.0 { r.stats.nodes as f64 / secs } else { 0.0 },
        });
    }
    Ok(BenchReport {
        family: "c14".into(),
        window_states: dp.state_count(),
        seeds: dp.seed_count(),
        setup_ms,
        rows,
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
