//! Cross-checks between the three exact solvers and the closed forms on
//! instances small enough for exhaustive search.

use rainbow_core::formulas::{gamma_r2_c13, gamma_r2_pn2, regular_lower_bound};
use rainbow_core::rdf::is_krdf;
use rainbow_core::solvers::{
    enumerate_optima, solve_branch_bound, solve_bruteforce, solve_transfer_dp,
    solve_transfer_dp_for, NoClock, TransferDp,
};
use rainbow_core::{Graph, SearchLimits, SolverResult};

fn bb(g: &Graph, k: u8) -> SolverResult {
    solve_branch_bound(g, k, &SearchLimits::UNLIMITED, &NoClock).unwrap()
}

fn check_lower_bound(g: &Graph, r: &SolverResult) {
    let degree = g.regular_degree().unwrap();
    assert!(
        u64::from(r.optimum) >= regular_lower_bound(g.vertex_count() as u64, degree as u64),
        "{} below the regular bound on {}",
        r.optimum,
        g.family()
    );
}

#[test]
fn solvers_agree_on_small_circulants() {
    for (jump, lo) in [(4usize, 9usize), (3, 7)] {
        for n in lo..=13 {
            let g = Graph::circulant(n, &[1, jump]).unwrap();
            let brute = solve_bruteforce(&g, 2).unwrap();
            let search = bb(&g, 2);
            let dp = solve_transfer_dp(n, jump, 2).unwrap();
            assert_eq!(brute.optimum, search.optimum, "C({n};{{1,{jump}}})");
            assert_eq!(brute.optimum, dp.optimum, "C({n};{{1,{jump}}})");
            // both search solvers return the lexicographically smallest optimum
            assert_eq!(brute.witness, search.witness);
            for r in [&brute, &search, &dp] {
                assert!(is_krdf(&g, &r.witness));
                assert_eq!(r.witness.weight(), r.optimum);
                check_lower_bound(&g, r);
            }
        }
    }
}

#[test]
fn solvers_agree_on_small_petersen() {
    for n in [5, 6] {
        let g = Graph::generalized_petersen(n, 2).unwrap();
        let brute = solve_bruteforce(&g, 2).unwrap();
        let search = bb(&g, 2);
        assert_eq!(brute.optimum, search.optimum);
        assert_eq!(brute.witness, search.witness);
        assert_eq!(u64::from(brute.optimum), gamma_r2_pn2(n as u64).unwrap());
        check_lower_bound(&g, &brute);
    }
}

#[test]
fn c13_formula_against_exhaustive_search() {
    for n in 7..=13u64 {
        let g = Graph::circulant(n as usize, &[1, 3]).unwrap();
        assert_eq!(u64::from(solve_bruteforce(&g, 2).unwrap().optimum), gamma_r2_c13(n).unwrap());
    }
}

#[test]
fn c13_formula_against_dp() {
    let dp = TransferDp::new(3).unwrap();
    for r in dp.sweep(7..=120).unwrap() {
        let n = r.witness.len() as u64;
        assert_eq!(u64::from(r.optimum), gamma_r2_c13(n).unwrap(), "n = {n}");
    }
}

#[test]
fn c14_exhaustive_values() {
    // 0010100202 is a 2RDF of weight 4 on C(10;{1,4})
    let expected = [(9, 4), (10, 4), (11, 5), (12, 4), (13, 6)];
    for (n, value) in expected {
        let g = Graph::circulant(n, &[1, 4]).unwrap();
        assert_eq!(solve_bruteforce(&g, 2).unwrap().optimum, value, "n = {n}");
    }
}

#[test]
fn dp_agrees_with_branch_and_bound_beyond_the_guard() {
    for jump in [2usize, 3, 4, 5] {
        for n in (2 * jump + 1).max(7)..=18 {
            let g = Graph::circulant(n, &[1, jump]).unwrap();
            let dp = solve_transfer_dp_for(&g, 2).unwrap();
            assert_eq!(dp.optimum, bb(&g, 2).optimum, "C({n};{{1,{jump}}})");
            check_lower_bound(&g, &dp);
        }
    }
}

#[test]
fn domination_bracket() {
    // γ_r1 ≤ γ_r2 ≤ 2 γ_r1
    let graphs = [
        Graph::circulant(9, &[1, 4]).unwrap(),
        Graph::circulant(11, &[1, 3]).unwrap(),
        Graph::circulant(8, &[1]).unwrap(),
        Graph::circulant(10, &[2, 5]).unwrap(),
        Graph::generalized_petersen(5, 2).unwrap(),
        Graph::generalized_petersen(6, 1).unwrap(),
    ];
    for g in &graphs {
        let one = bb(g, 1).optimum;
        let two = bb(g, 2).optimum;
        assert!(one <= two && two <= 2 * one, "{}: {one} {two}", g.family());
        if g.vertex_count() <= 13 {
            assert_eq!(solve_bruteforce(g, 1).unwrap().optimum, one);
        }
    }
}

#[test]
fn every_enumerated_optimum_is_valid_and_minimal() {
    let g = Graph::circulant(11, &[1, 4]).unwrap();
    let all = enumerate_optima(&g, 2, &SearchLimits::UNLIMITED, &NoClock).unwrap();
    assert!(all.exact && !all.truncated);
    assert_eq!(all.optimum, 5);
    assert!(!all.assignments.is_empty());
    assert!(all.assignments.windows(2).all(|w| w[0].format() < w[1].format()));
    for f in &all.assignments {
        assert!(is_krdf(&g, f));
        assert_eq!(f.weight(), all.optimum);
    }
    // optima are closed under rotation
    let mut rotated: Vec<String> = all.assignments.iter().map(|f| f.rotate(3).format()).collect();
    rotated.sort();
    let original: Vec<String> = all.assignments.iter().map(|f| f.format()).collect();
    assert_eq!(rotated, original);
}

#[test]
fn solvers_are_deterministic() {
    let g = Graph::generalized_petersen(7, 2).unwrap();
    let a = bb(&g, 2);
    let b = bb(&g, 2);
    assert_eq!(a.witness, b.witness);
    assert_eq!(a.stats.nodes, b.stats.nodes);
    let dp = TransferDp::new(4).unwrap();
    assert_eq!(dp.solve(47).unwrap().witness, dp.solve(47).unwrap().witness);
    let g = Graph::circulant(12, &[1, 4]).unwrap();
    assert_eq!(solve_bruteforce(&g, 2).unwrap(), solve_bruteforce(&g, 2).unwrap());
}
