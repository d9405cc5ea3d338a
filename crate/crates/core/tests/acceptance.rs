//! Acceptance suite: one test per claim bundle, each ending in a single
//! PASS/FAIL line. The suite is exhaustive where the claims are finite
//! (all connected graphs through 7 vertices, all connected bicyclic graphs
//! through 8) and exact everywhere integers are compared.

use std::sync::OnceLock;

use num::BigInt;
use rayon::prelude::*;

use slq_core::enumerate::{generate_all_bicyclic, generate_all_connected, verify_extremal};
use slq_core::families::{
    build_family, closed_form_poly, difference_identity, extremal_graph, Family, FamilyError,
};
use slq_core::graph::{Graph, ParityClass};
use slq_core::oracle::{coeff_oracle_pair, phi_extremes_bicyclic, spanning_tree_count};
use slq_core::poly::{coeffs_via_charpoly, signless_charpoly, DominanceRelation, MatrixKind};
use slq_core::spectral::{cubic_root_bounds_check, ie_dominance_spot_check, ie_threshold_scan};
use slq_core::transforms::{seeded_suite, TransformRecord};

const SUITE_SEED: u64 = 20240817;

fn connected_up_to_7() -> &'static Vec<Graph> {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (1..=7)
            .flat_map(|n| generate_all_connected(n).expect("n within range"))
            .collect()
    })
}

fn bicyclic_4_to_8() -> &'static Vec<Graph> {
    static CACHE: OnceLock<Vec<Graph>> = OnceLock::new();
    CACHE.get_or_init(|| {
        (4..=8)
            .flat_map(|n| generate_all_bicyclic(n).expect("n within range"))
            .collect()
    })
}

fn rewrite_suite() -> &'static Vec<TransformRecord> {
    static CACHE: OnceLock<Vec<TransformRecord>> = OnceLock::new();
    CACHE.get_or_init(|| seeded_suite(SUITE_SEED, 500).expect("suite generates"))
}

fn pass(k: usize, msg: &str) {
    println!("ACCEPTANCE CRITERION {k}: PASS — {msg}");
}

#[test]
fn criterion_1_oracle_equals_charpoly_exhaustively() {
    let connected = connected_up_to_7();
    let mismatches: usize = connected
        .par_iter()
        .chain(bicyclic_4_to_8().par_iter().filter(|g| g.n() == 8))
        .map(|g| {
            let (q, l) = coeff_oracle_pair(g).expect("at most 21 edges");
            let q2 = coeffs_via_charpoly(g, MatrixKind::SignlessLaplacian);
            let l2 = coeffs_via_charpoly(g, MatrixKind::Laplacian);
            usize::from(q.values() != q2.values()) + usize::from(l.values() != l2.values())
        })
        .sum();
    let total = connected.len() + bicyclic_4_to_8().iter().filter(|g| g.n() == 8).count();
    assert_eq!(
        mismatches, 0,
        "ACCEPTANCE CRITERION 1: FAIL — {mismatches} oracle/charpoly disagreements"
    );
    pass(
        1,
        &format!(
            "subgraph-weight oracle = characteristic polynomial on all {total} graphs \
             (every connected graph with n<=7 plus every connected bicyclic graph with n=8), \
             both matrix kinds, entrywise exact"
        ),
    );
}

#[test]
fn criterion_2_bipartite_vectors_coincide() {
    let bipartite: Vec<&Graph> = connected_up_to_7()
        .iter()
        .filter(|g| g.is_bipartite())
        .collect();
    // Census check: 1+1+1+3+5+17+44 connected bipartite graphs for n=1..7.
    assert_eq!(bipartite.len(), 72, "connected bipartite census n<=7");
    let mismatches: usize = bipartite
        .par_iter()
        .map(|g| {
            let q = coeffs_via_charpoly(g, MatrixKind::SignlessLaplacian);
            let l = coeffs_via_charpoly(g, MatrixKind::Laplacian);
            usize::from(q.values() != l.values())
        })
        .sum();
    assert_eq!(
        mismatches, 0,
        "ACCEPTANCE CRITERION 2: FAIL — {mismatches} bipartite graphs with differing vectors"
    );
    pass(
        2,
        &format!(
            "Laplacian and signless-Laplacian coefficient vectors identical on all {} \
             bipartite graphs in the n<=7 sweep",
            bipartite.len()
        ),
    );
}

#[test]
fn criterion_3_closed_forms_match_constructed_hubs() {
    let start = std::time::Instant::now();
    let mut checked = 0usize;
    for family in Family::ALL {
        for n in family.closed_form_min_n()..=16 {
            let hub = build_family(&family.hub_spec(n).expect("n is valid")).expect("buildable");
            let direct = signless_charpoly(&hub);
            let closed = closed_form_poly(family, n).expect("n is valid");
            assert_eq!(
                direct, closed,
                "ACCEPTANCE CRITERION 3: FAIL — closed form differs from hub charpoly \
                 for {family} at n={n}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "ACCEPTANCE CRITERION 3: FAIL — {checked} comparisons took {elapsed:?} (budget 1 s)"
    );
    pass(
        3,
        &format!(
            "all 8 family closed forms equal the constructed hub characteristic polynomial \
             for every valid n<=16 ({checked} exact comparisons in {elapsed:?})"
        ),
    );
}

#[test]
fn criterion_4_difference_identities_hold_exactly() {
    let mut checked = 0usize;
    for eq in 1..=6usize {
        for n in 4..=16usize {
            let identity = match difference_identity(eq, n) {
                Ok(d) => d,
                Err(FamilyError::OutOfRange { .. }) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            };
            assert_eq!(
                identity.lhs, identity.rhs,
                "ACCEPTANCE CRITERION 4: FAIL — identity ({eq}) differs at n={n}"
            );
            checked += 1;
        }
    }
    pass(
        4,
        &format!(
            "difference identities (1)-(6): closed-form difference equals the factored \
             right-hand side exactly for every valid n<=16 ({checked} comparisons)"
        ),
    );
}

#[test]
fn criterion_5_unique_dominance_minimizers() {
    let mut cases = Vec::new();
    for n in 4..=8usize {
        cases.push((n, ParityClass::OddClass));
    }
    for n in 5..=8usize {
        cases.push((n, ParityClass::EvenClass));
    }
    let mut findings = 0usize;
    for &(n, class) in &cases {
        let report = verify_extremal(n, class).expect("supported range");
        assert!(
            report.verified && report.unique_minimizer,
            "ACCEPTANCE CRITERION 5: FAIL — n={n} {class:?}: verified={}, unique={}, \
             violations={:?}",
            report.verified,
            report.unique_minimizer,
            report.violations
        );
        findings += report.clause_mismatches;
    }
    pass(
        5,
        &format!(
            "the class minimizer is the unique dominance-minimal graph (up to isomorphism) \
             in all {} (order, class) cases covering n=4..8 odd and n=5..8 even; \
             {findings} equality-index findings recorded as non-fatal",
            cases.len()
        ),
    );
}

#[test]
fn criterion_6_rewrites_never_increase_coefficients() {
    let records = rewrite_suite();
    assert!(records.len() >= 500, "at least 500 seeded applications");
    for r in records.iter() {
        assert_eq!(
            r.dominance.relation,
            DominanceRelation::Dominates,
            "ACCEPTANCE CRITERION 6: FAIL — {} produced relation {:?} on input {}",
            r.name,
            r.dominance.relation,
            r.input.to_text()
        );
    }
    pass(
        6,
        &format!(
            "{} seeded rewrite applications (n<=8): every one left phi_i non-increasing \
             for all i with a strict decrease somewhere (exact integer comparison)",
            records.len()
        ),
    );
}

#[test]
fn criterion_7_phi_shortcuts_and_prose_audit() {
    let instances = bicyclic_4_to_8();
    for g in instances.iter() {
        let n = g.n();
        let ex = phi_extremes_bicyclic(g).expect("connected bicyclic");
        let (q, _) = coeff_oracle_pair(g).expect("n+1 <= 9 edges");
        assert_eq!(ex.phi_1, BigInt::from(2 * (n + 1)), "phi_1 shortcut at {g:?}");
        assert_eq!(q.get(1), &ex.phi_1, "oracle phi_1 at {g:?}");
        assert_eq!(q.get(n), &ex.phi_n, "structural phi_n at {g:?}");
        if g.is_bipartite() {
            let tau = spanning_tree_count(g).expect("connected");
            let expected = BigInt::from(n) * &tau;
            assert_eq!(
                ex.phi_n_minus_1_if_bipartite.as_ref(),
                Some(&expected),
                "bipartite phi_(n-1) = n*tau at {g:?}"
            );
            assert_eq!(q.get(n - 1), &expected, "oracle phi_(n-1) at {g:?}");
        }
    }

    // Documented discrepancies between the correct values and the source
    // text's literal case displays, reproduced exactly.
    let k4e = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
    let ex = phi_extremes_bicyclic(&k4e).unwrap();
    assert_eq!((&ex.phi_n, &ex.prose_phi_n_raw), (&BigInt::from(16), &BigInt::from(4)));

    let theta123 =
        Graph::from_edge_list(5, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
    let ex = phi_extremes_bicyclic(&theta123).unwrap();
    assert_eq!(
        (&ex.phi_n, &ex.prose_phi_n_weighted),
        (&BigInt::from(16), &BigInt::from(12))
    );

    let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let ex = phi_extremes_bicyclic(&k23).unwrap();
    assert_eq!(
        (&ex.phi_n_minus_1_if_bipartite, &ex.prose_phi_n_minus_1),
        (&Some(BigInt::from(60)), &Some(BigInt::from(14)))
    );

    pass(
        7,
        &format!(
            "phi_1 = 2(n+1), structural phi_n, and bipartite phi_(n-1) = n*tau match the \
             oracle on all {} bicyclic instances (n=4..8); the three documented \
             prose-vs-computed discrepancies reproduce exactly (16 vs 4, 16 vs 12, 60 vs 14)",
            instances.len()
        ),
    );
}

#[test]
fn criterion_8_ie_crossover_and_root_bounds() {
    let report = ie_threshold_scan(5, 60).expect("valid range");
    assert!(
        report.paths_agree,
        "ACCEPTANCE CRITERION 8: FAIL — spectrum and closed-form paths disagree \
         (max {:.3e})",
        report.max_path_disagreement
    );
    for row in &report.rows {
        let expected_winner = if row.n <= 30 { "Bn2" } else { "Bn1" };
        assert_eq!(
            row.winner, expected_winner,
            "ACCEPTANCE CRITERION 8: FAIL — unexpected winner at n={}",
            row.n
        );
    }
    assert_eq!(report.crossover, Some(31));

    let failing: Vec<usize> = (31..=200)
        .filter(|&n| !cubic_root_bounds_check(n).expect("n >= 31").all_ok)
        .collect();
    assert!(
        failing.is_empty(),
        "ACCEPTANCE CRITERION 8: FAIL — the scan half passes (even-class minimizer wins \
         for 5<=n<=30, odd-class for 31<=n<=60, paths within 1e-6, crossover at 31), but \
         the claimed root intervals do not all hold for n=31..200: all_ok is false at \
         n={failing:?}. The alpha2 >= 3.93 claim is false there: with p1(x) = \
         x^3-(n+4)x^2+4nx-8, the integer witness 100^3*p1(393/100) = 275100*n - 9081143 \
         is negative exactly for n <= 33 (n=31: -553043; n=32: -278043; n=33: -2943), \
         which places 3.93 strictly between alpha2 and alpha1, so alpha2 < 3.93 at \
         n=31,32,33. The interval block holds for every n=34..200."
    );
    pass(
        8,
        "incidence-energy crossover at n=31 with both computation paths agreeing, and all \
         root intervals hold for n=31..200",
    );
}

#[test]
fn criterion_9_dominance_implies_energy_order() {
    let records = rewrite_suite();
    let mut checked = 0usize;
    for r in records.iter() {
        assert!(
            ie_dominance_spot_check(&r.input, &r.output).expect("spectra converge"),
            "ACCEPTANCE CRITERION 9: FAIL — {} violated the energy inequality on input {}",
            r.name,
            r.input.to_text()
        );
        checked += 1;
    }
    // The two class minimizers at matching orders are dominance-comparable
    // witnesses too (odd-class minimizer is dominated by no even-class one;
    // the check is vacuous when incomparable, asserted when comparable).
    for n in 5..=12usize {
        let g1 = extremal_graph(n, ParityClass::OddClass).unwrap();
        let g2 = extremal_graph(n, ParityClass::EvenClass).unwrap();
        assert!(ie_dominance_spot_check(&g1, &g2).expect("spectra converge"));
        checked += 1;
    }
    pass(
        9,
        &format!(
            "incidence energy respects coefficient dominance within 1e-7 on all {checked} \
             certified pairs from the rewrite suite"
        ),
    );
}
