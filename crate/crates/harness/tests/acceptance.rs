//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every criterion runs regardless of earlier failures.

use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbow_core::formulas::{
    construct_c14, gamma_r2_c13, gamma_r2_c14, gamma_r2_pn2, regular_lower_bound,
};
use rainbow_core::rdf::{beta_audit, is_krdf};
use rainbow_core::solvers::{solve_branch_bound, solve_bruteforce, NoClock, TransferDp};
use rainbow_core::{ColorSet, Graph, RainbowAssignment, SearchLimits};
use rainbow_harness::beta::{beta_report, BetaReport, BETA_GUARD};
use rainbow_harness::report::{to_json, AuditJson, SolverJson};
use rainbow_harness::verify::{verify_range, Oracles, VerifyFamily};

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

/// Exact optima and witnesses seen by the suite, for the cross-cutting
/// criteria.
#[derive(Default)]
struct Seen {
    /// (instance, vertices, regular degree, optimum)
    optima: Vec<(String, usize, usize, u32)>,
    /// 4-regular instances with a solver witness.
    witnesses: Vec<(Graph, RainbowAssignment)>,
}

impl Seen {
    fn optimum(&mut self, g: &Graph, value: u32) {
        let degree = g.regular_degree().expect("suite instances are regular");
        self.optima.push((g.family().to_string(), g.vertex_count(), degree, value));
    }

    fn witness(&mut self, g: &Graph, f: &RainbowAssignment) {
        if g.regular_degree() == Some(4) {
            self.witnesses.push((g.clone(), f.clone()));
        }
    }
}

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).output().expect("binary runs")
}

fn c14(n: usize) -> Graph {
    Graph::circulant(n, &[1, 4]).unwrap()
}

fn c13(n: usize) -> Graph {
    Graph::circulant(n, &[1, 3]).unwrap()
}

fn criterion_1(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let out = rainbow(&[
        "verify",
        "--family",
        "c14",
        "--from",
        "9",
        "--to",
        "120",
        "--oracles",
        "formula,construction,dp",
    ]);
    let exit = out.status.code();

    let mut bad_constructions = Vec::new();
    for n in 9..=120u64 {
        let f = construct_c14(n).unwrap();
        if !is_krdf(&c14(n as usize), &f) || u64::from(f.weight()) != gamma_r2_c14(n).unwrap().value
        {
            bad_constructions.push(n);
        }
    }
    let dp = TransferDp::new(4).unwrap();
    let mut disagreements = Vec::new();
    for r in dp.sweep(9..=120).unwrap() {
        let n = r.witness.len();
        let g = c14(n);
        seen.optimum(&g, r.optimum);
        seen.witness(&g, &r.witness);
        let formula = gamma_r2_c14(n as u64).unwrap().value;
        if u64::from(r.optimum) != formula {
            disagreements
                .push(format!("n={n} dp={} formula={formula} witness={}", r.optimum, r.witness));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        id: 1,
        title: "verify c14 9..120 (formula, construction, dp) exits 0",
        pass: exit == Some(0) && bad_constructions.is_empty() && secs < 30.0,
        detail: format!(
            "exit={exit:?}; invalid or off-weight constructions: {bad_constructions:?}; \
             dp/formula disagreements: [{}]; {secs:.1}s",
            disagreements.join(", ")
        ),
    }
}

fn criterion_2(seen: &mut Seen) -> Outcome {
    let expected = [4u32, 6, 5, 4, 6];
    let dp = TransferDp::new(4).unwrap();
    let mut pass = true;
    let mut rows = Vec::new();
    for (n, want) in (9..=13usize).zip(expected) {
        let g = c14(n);
        let brute = solve_bruteforce(&g, 2).unwrap();
        seen.optimum(&g, brute.optimum);
        seen.witness(&g, &brute.witness);
        let dp = dp.solve(n).unwrap().optimum;
        let formula = gamma_r2_c14(n as u64).unwrap().value as u32;
        let ok = brute.optimum == dp && dp == formula && formula == want;
        pass &= ok;
        rows.push(format!(
            "n={n} brute={} dp={dp} formula={formula} expected={want}{}",
            brute.optimum,
            if ok { String::new() } else { format!(" MISMATCH (brute witness {})", brute.witness) }
        ));
    }
    Outcome {
        id: 2,
        title: "brute force = dp = formula = 4,6,5,4,6 on C(n;{1,4}), n=9..13",
        pass,
        detail: rows.join("; "),
    }
}

fn criterion_3(seen: &mut Seen) -> Outcome {
    let dp = TransferDp::new(3).unwrap();
    let mut bad = Vec::new();
    for r in dp.sweep(7..=120).unwrap() {
        let n = r.witness.len();
        let g = c13(n);
        seen.optimum(&g, r.optimum);
        seen.witness(&g, &r.witness);
        let formula = gamma_r2_c13(n as u64).unwrap();
        if u64::from(r.optimum) != formula {
            bad.push(format!("n={n} dp={} formula={formula}", r.optimum));
        }
    }
    for n in 7..=13usize {
        let g = c13(n);
        let brute = solve_bruteforce(&g, 2).unwrap();
        seen.optimum(&g, brute.optimum);
        seen.witness(&g, &brute.witness);
        let formula = gamma_r2_c13(n as u64).unwrap();
        if u64::from(brute.optimum) != formula {
            bad.push(format!("n={n} brute={} formula={formula}", brute.optimum));
        }
    }
    Outcome {
        id: 3,
        title: "c13 formula = dp for 7..120 and = brute force for 7..13",
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "114 dp rows, 7 brute rows agree".into()
        } else {
            bad.join("; ")
        },
    }
}

/// A random 2RDF of `g`: random labels, then every uncovered empty vertex
/// gets `{1, 2}`, then labels are lowered in random order while the
/// labeling stays valid.
fn random_rdf(g: &Graph, rng: &mut ChaCha8Rng) -> RainbowAssignment {
    let n = g.vertex_count();
    let density = rng.gen_range(0.05..0.6);
    let mut bits: Vec<u8> =
        (0..n).map(|_| if rng.gen_bool(density) { rng.gen_range(1..=3) } else { 0 }).collect();
    let covered = |bits: &[u8], v: usize| {
        bits[v] != 0 || g.neighbors(v).iter().fold(0, |a, &u| a | bits[u]) == 3
    };
    for v in 0..n {
        if !covered(&bits, v) {
            bits[v] = 3;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for v in order {
        for lower in [0u8, 1, 2] {
            if bits[v] == 0 || lower == bits[v] || (lower != 0 && lower & bits[v] == 0) {
                continue;
            }
            let old = bits[v];
            bits[v] = lower;
            let ok = covered(&bits, v) && g.neighbors(v).iter().all(|&u| covered(&bits, u));
            if ok {
                break;
            }
            bits[v] = old;
        }
    }
    RainbowAssignment::new(2, bits.into_iter().map(ColorSet::from_bits).collect()).unwrap()
}

fn criterion_4(seen: &Seen) -> Outcome {
    let mut failures = Vec::new();
    let mut constructions = 0;
    for n in 9..=300u64 {
        let g = c14(n as usize);
        let a = beta_audit(&g, &construct_c14(n).unwrap()).unwrap();
        constructions += 1;
        if !a.identity_holds() {
            failures.push(format!("construction n={n}"));
        }
    }
    for (g, f) in &seen.witnesses {
        if !beta_audit(g, f).unwrap().identity_holds() {
            failures.push(format!("witness {} {f}", g.family()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_241_018);
    let mut random = 0;
    while random < 1200 {
        let n = rng.gen_range(9..=90usize);
        let a = rng.gen_range(1..(n - 1) / 2);
        let b = rng.gen_range(a + 1..=(n - 1) / 2);
        let g = Graph::circulant(n, &[a, b]).unwrap();
        let f = random_rdf(&g, &mut rng);
        assert!(is_krdf(&g, &f));
        if !beta_audit(&g, &f).unwrap().identity_holds() {
            failures.push(format!("random {} {f}", g.family()));
        }
        random += 1;
    }
    Outcome {
        id: 4,
        title: "6w(f) = 2n + beta on constructions, solver witnesses and random 2RDFs",
        pass: failures.is_empty() && random >= 1000,
        detail: format!(
            "{constructions} constructions, {} witnesses, {random} random 2RDFs; failures: {failures:?}",
            seen.witnesses.len()
        ),
    }
}

fn beta_reports() -> Vec<BetaReport> {
    (9..=13)
        .map(|n| beta_report(n, BETA_GUARD, &SearchLimits::UNLIMITED, &NoClock).unwrap())
        .collect()
}

fn criterion_5(seen: &mut Seen) -> Outcome {
    let reports = beta_reports();
    let mut pass = true;
    let mut parts = Vec::new();
    for r in &reports {
        let g = c14(r.n as usize);
        seen.optimum(&g, r.optimum);
        let ok = r.exact && !r.truncated && r.identity_holds && r.requirement_met;
        pass &= ok;
        let need = match r.n % 6 {
            0 => "beta=0 achievable".to_string(),
            4 => "min beta>=12".to_string(),
            _ => "min beta>=6".to_string(),
        };
        parts.push(format!(
            "n={} optimum={} optima={} min beta={} ({need}: {})",
            r.n,
            r.optimum,
            r.optima,
            r.min_beta,
            if ok { "ok" } else { "VIOLATED" }
        ));
    }
    Outcome {
        id: 5,
        title: "beta bounds over every optimum of C(n;{1,4}), n=9..13",
        pass,
        detail: parts.join("; "),
    }
}

fn criterion_7(seen: &mut Seen) -> Outcome {
    let g = Graph::generalized_petersen(5, 2).unwrap();
    let bb = solve_branch_bound(&g, 2, &SearchLimits::UNLIMITED, &NoClock).unwrap();
    let brute = solve_bruteforce(&g, 2).unwrap();
    let formula = gamma_r2_pn2(5).unwrap();
    seen.optimum(&g, bb.optimum);
    seen.optimum(&g, brute.optimum);
    Outcome {
        id: 7,
        title: "branch and bound on P(5,2) = 5 = pn2(5), brute force agrees",
        pass: bb.exact
            && bb.optimum == 5
            && u64::from(bb.optimum) == formula
            && brute.optimum == bb.optimum,
        detail: format!(
            "bb={} ({}) brute={} formula={formula}",
            bb.optimum, bb.witness, brute.optimum
        ),
    }
}

fn criterion_8(seen: &mut Seen) -> Outcome {
    let out = rainbow(&["adjudicate-p10-2"]);
    let exit = out.status.code();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap_or_default();
    let exact = report["result"]["exact"].as_bool() == Some(true);
    let optimum = report["result"]["optimum"].as_u64();
    let verdict = report["verdict"].as_str().unwrap_or("").to_string();
    let candidates: Vec<(String, u64)> = report["candidates"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|c| {
                    (
                        c["source"].as_str().unwrap_or("").to_string(),
                        c["value"].as_u64().unwrap_or(0),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    let matching: Vec<&str> =
        candidates.iter().filter(|(_, v)| Some(*v) == optimum).map(|(s, _)| s.as_str()).collect();
    let consistent = if matching.is_empty() {
        verdict == "matches-none"
    } else {
        verdict == format!("matches:{}", matching.join(","))
    };
    let has_both = candidates.iter().map(|c| c.1).collect::<Vec<_>>() == [8, 10];
    if let (true, Some(v)) = (exact, optimum) {
        seen.optimum(&Graph::generalized_petersen(10, 2).unwrap(), v as u32);
    }
    Outcome {
        id: 8,
        title: "adjudicate-p10-2 reports an exact optimum and the matching value",
        pass: exit == Some(0) && exact && consistent && has_both,
        detail: format!("exit={exit:?} optimum={optimum:?} verdict={verdict}"),
    }
}

fn criterion_6(seen: &Seen) -> Outcome {
    let violations: Vec<String> = seen
        .optima
        .iter()
        .filter(|(_, n, k, opt)| u64::from(*opt) < regular_lower_bound(*n as u64, *k as u64))
        .map(|(name, n, k, opt)| format!("{name}: {opt} < ceil(2*{n}/({k}+2))"))
        .collect();
    Outcome {
        id: 6,
        title: "every computed optimum >= ceil(2|V|/(K+2))",
        pass: violations.is_empty(),
        detail: format!("{} optima checked; violations: {violations:?}", seen.optima.len()),
    }
}

/// The JSON reports behind criteria 1 to 5, concatenated.
fn reports_1_to_5() -> String {
    let mut out = String::new();
    let c14_rows =
        verify_range(VerifyFamily::C14, 9, 120, "formula,construction,dp".parse().unwrap())
            .unwrap();
    out.push_str(&to_json(&c14_rows));
    let small: Vec<SolverJson> =
        (9..=13).map(|n| SolverJson::from(&solve_bruteforce(&c14(n), 2).unwrap())).collect();
    out.push_str(&to_json(&small));
    out.push_str(&to_json(&verify_range(VerifyFamily::C13, 7, 120, Oracles::ALL).unwrap()));
    let audits: Vec<AuditJson> = (9..=300u64)
        .map(|n| {
            AuditJson::from(&beta_audit(&c14(n as usize), &construct_c14(n).unwrap()).unwrap())
        })
        .collect();
    out.push_str(&to_json(&audits));
    out.push_str(&to_json(&beta_reports()));
    out
}

fn criterion_9() -> Outcome {
    let first = reports_1_to_5();
    let second = reports_1_to_5();
    let cli_args: [&[&str]; 3] = [
        &[
            "verify",
            "--family",
            "c14",
            "--from",
            "9",
            "--to",
            "120",
            "--oracles",
            "formula,construction,dp",
        ],
        &["verify", "--family", "c13", "--from", "7", "--to", "120", "--format", "csv"],
        &["beta-report", "--n", "13"],
    ];
    let mut cli_same = true;
    for args in cli_args {
        cli_same &= rainbow(args).stdout == rainbow(args).stdout;
    }
    Outcome {
        id: 9,
        title: "criteria 1-5 reports are byte-identical across runs",
        pass: first == second && cli_same,
        detail: format!(
            "{} bytes in-process identical: {}; CLI reruns identical: {cli_same}",
            first.len(),
            first == second
        ),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut seen = Seen::default();
    let mut outcomes = vec![criterion_1(&mut seen), criterion_2(&mut seen), criterion_3(&mut seen)];
    outcomes.push(criterion_4(&seen));
    outcomes.push(criterion_5(&mut seen));
    let seventh = criterion_7(&mut seen);
    let eighth = criterion_8(&mut seen);
    outcomes.push(criterion_6(&seen));
    outcomes.push(seventh);
    outcomes.push(eighth);
    outcomes.push(criterion_9());

    println!();
    for o in &outcomes {
        println!("{} criterion {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.title);
        println!("    {}", o.detail);
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!(
        "acceptance: {}/{} criteria pass ({:.1}s)",
        outcomes.len() - failed.len(),
        outcomes.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
