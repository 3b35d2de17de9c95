//! The release gate: one test per acceptance criterion, each printing a
//! single pass/fail line. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).

use std::collections::BTreeSet;

use num_bigint::BigInt;

use schubert::combinatorics::enumerate_gamma;
use schubert::ehrhart::{
    catalan_polynomial, count_dilation, ehrhart_polynomial, f_closed,
    f_generating_function, path_vectors,
};
use schubert::matroid::{all_schubert_sets, is_sparse_paving, RSequence, SchubertSet};
use schubert::oracles::{
    f_bruteforce, key_polynomial, kohnert_closure, kohnert_monomial_count,
    lattice_points_direct, row_counts, Budgets, MultivariatePolynomial,
};
use schubert::scan::{
    check_sparse_paving_bounds, run_identity_suite, scan_f_positivity,
};

fn report(id: u32, name: &str, failure: Option<String>) {
    match failure {
        None => println!("criterion {id} ({name}): pass"),
        Some(detail) => {
            println!("criterion {id} ({name}): FAIL - {detail}");
            panic!("criterion {id} ({name}) failed: {detail}");
        }
    }
}

#[test]
fn criterion_1_oracle_triangle() {
    let budgets = Budgets::default();
    let mut failure = None;
    'outer: for n in 2..=7u32 {
        for s in all_schubert_sets(n) {
            let r = s.to_rsequence();
            for t in 0..=3i64 {
                let engine = count_dilation(&r, t);
                let direct = lattice_points_direct(&s, t, &budgets).unwrap();
                if engine != direct {
                    failure = Some(format!(
                        "S={:?} t={t}: engine {engine} != direct {direct}",
                        s.elements()
                    ));
                    break 'outer;
                }
                let boxes = t as usize * s.rank_total();
                if boxes <= budgets.max_boxes {
                    let weight: Vec<u32> =
                        s.indicator().iter().map(|&x| x as u32 * t as u32).collect();
                    let kohnert = kohnert_monomial_count(&weight, &budgets).unwrap();
                    if kohnert != engine {
                        failure = Some(format!(
                            "S={:?} t={t}: kohnert {kohnert} != engine {engine}",
                            s.elements()
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    report(1, "oracle triangle", failure);
}

#[test]
fn criterion_2_f_triple_agreement() {
    let budgets = Budgets::default();
    let mut failure = None;
    'outer: for a in 0..=4i64 {
        for b in 0..=4i64 {
            if a + b == 0 {
                continue;
            }
            for c in -8..=8i64 {
                for t in 0..=5i64 {
                    let closed = f_closed(a, b, c, t).unwrap();
                    let generating = f_generating_function(a, b, c, t).unwrap();
                    let brute = f_bruteforce(a, b, c, t, &budgets).unwrap();
                    if closed != generating || closed != brute {
                        failure = Some(format!(
                            "(a,b,c,t)=({a},{b},{c},{t}): closed {closed}, \
                             generating {generating}, brute {brute}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    report(2, "F triple agreement", failure);
}

#[test]
fn criterion_3_published_anchor_values() {
    let mut failure = None;

    let g4: Vec<Vec<u64>> =
        enumerate_gamma(4).iter().map(|c| c.parts().to_vec()).collect();
    if g4 != vec![vec![2, 2]] {
        failure = Some(format!("gamma_4 = {g4:?}"));
    }

    let g9: BTreeSet<Vec<u64>> =
        enumerate_gamma(9).iter().map(|c| c.parts().to_vec()).collect();
    let expected: BTreeSet<Vec<u64>> = [
        vec![2, 7],
        vec![3, 6],
        vec![4, 5],
        vec![2, 2, 5],
        vec![2, 3, 4],
        vec![2, 4, 3],
        vec![3, 3, 3],
        vec![2, 2, 2, 3],
    ]
    .into_iter()
    .collect();
    if failure.is_none() && g9 != expected {
        failure = Some(format!("gamma_9 = {g9:?}"));
    }

    let r = RSequence::new(&[2, 1, 2, 1, 1, 1]).unwrap();
    let paths: BTreeSet<Vec<i64>> = path_vectors(&r, 1).into_iter().collect();
    let expected_paths: BTreeSet<Vec<i64>> = [
        vec![0, 0, 0],
        vec![0, 1, -1],
        vec![1, -1, 0],
        vec![1, 0, -1],
        vec![2, -1, -1],
    ]
    .into_iter()
    .collect();
    if failure.is_none() && paths != expected_paths {
        failure = Some(format!("paths at t=1: {paths:?}"));
    }

    let uv = SchubertSet::new(&[3, 6, 8]).unwrap().to_rsequence().uv_bounds();
    if failure.is_none() && (uv.u != vec![2, 1, 0] || uv.v != vec![0, 1, 1]) {
        failure = Some(format!("u={:?} v={:?}", uv.u, uv.v));
    }

    let kappa = key_polynomial(&[0, 2, 1]).unwrap();
    let mut expected_kappa = MultivariatePolynomial::zero();
    for e in [[0, 2, 1], [1, 1, 1], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        expected_kappa.add_term(e.to_vec(), BigInt::from(1));
    }
    if failure.is_none() && kappa != expected_kappa {
        failure = Some(format!("kappa_(0,2,1) has {} terms", kappa.num_terms()));
    }

    report(3, "published anchor values", failure);
}

#[test]
fn criterion_4_identity_suite() {
    let suite = run_identity_suite(5, 8).unwrap();
    let failure = if suite.passed() {
        None
    } else {
        Some(format!("{:?}", suite.counterexamples))
    };
    report(4, "identity regression suite", failure);
}

#[test]
fn criterion_5_catalan_recursion_vs_engine() {
    let mut failure = None;
    'outer: for (a, b) in [(1i64, 1i64), (1, 2), (2, 1), (2, 2)] {
        for n in 1..=4u32 {
            let blocks: Vec<u32> = (0..n).flat_map(|_| [a as u32, b as u32]).collect();
            let engine = ehrhart_polynomial(&RSequence::new(&blocks).unwrap());
            let recursion = catalan_polynomial(n, a, b).unwrap();
            if engine != recursion {
                failure = Some(format!("(n,a,b)=({n},{a},{b})"));
                break 'outer;
            }
        }
    }
    report(5, "Catalan recursion vs engine", failure);
}

#[test]
fn criterion_6_sparse_paving_bounds() {
    let scan = check_sparse_paving_bounds(10).unwrap();
    let failure = if scan.passed() {
        None
    } else {
        Some(format!("{:?}", scan.counterexamples))
    };
    report(6, "coefficientwise bounds T <= Sp <= U", failure);
}

#[test]
fn criterion_7_f_positivity_scan() {
    let scan = scan_f_positivity(6, 6, 6).unwrap();
    let failure = if scan.passed() && scan.instabilities == 0 {
        None
    } else {
        Some(format!(
            "instabilities={} counterexamples={:?}",
            scan.instabilities, scan.counterexamples
        ))
    };
    report(7, "F positivity scan (a,b,|c| <= 6)", failure);
}

#[test]
fn criterion_8_kohnert_equals_key_polynomial() {
    let budgets = Budgets::default();
    let mut failure = None;
    let mut alphas: Vec<Vec<u32>> = Vec::new();
    for rows in 1..=4usize {
        let mut cur = vec![0u32; rows];
        fill(&mut alphas, &mut cur, 0, 6);
    }
    fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, left: u32) {
        if pos == cur.len() {
            if cur.iter().any(|&x| x > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            fill(out, cur, pos + 1, left - v);
        }
        cur[pos] = 0;
    }
    for alpha in alphas {
        let closure = kohnert_closure(&alpha, &budgets).unwrap();
        let mut from_diagrams = MultivariatePolynomial::zero();
        for d in &closure {
            from_diagrams.add_term(row_counts(d, alpha.len()), BigInt::from(1));
        }
        let kappa = key_polynomial(&alpha).unwrap();
        if from_diagrams != kappa {
            failure = Some(format!("alpha={alpha:?}"));
            break;
        }
    }
    report(8, "Kohnert closure equals key polynomial", failure);
}

#[test]
fn criterion_9_sparse_paving_classifier() {
    // S = {k, k+2, ..., n} for 1 <= k <= n-2, plus the vacuous uniform
    // cases S = {n-k+1, ..., n} where every rank-size subset is a basis.
    let mut failure = None;
    'outer: for n in 2..=7u32 {
        for s in all_schubert_sets(n) {
            let uniform =
                s.elements() == (n + 1 - s.rank_total() as u32..=n).collect::<Vec<_>>();
            let pattern = (1..=n.saturating_sub(2)).any(|k| {
                let want: Vec<u32> = std::iter::once(k).chain(k + 2..=n).collect();
                s.elements() == want
            });
            if is_sparse_paving(&s).unwrap() != (uniform || pattern) {
                failure = Some(format!("S={:?}", s.elements()));
                break 'outer;
            }
        }
    }
    report(9, "sparse paving classifier", failure);
}
