//! Acceptance suite: every exact identity the crate promises, each as one
//! test printing a single PASS line (run with `--nocapture` to see them).
//!
//! All comparisons are bit-exact Laurent-polynomial equality; there are no
//! tolerances anywhere. The Kostant weighted sum is the reference value
//! throughout.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;

use hecke_trace::chambers::{classify_chamber, wset, wset_direct, ChamberClassification};
use hecke_trace::kostant::{enumerate_kostant, trace_kostant, KostantPartition};
use hecke_trace::laurent::{q_integer, q_integer_base, LaurentPoly};
use hecke_trace::product::trace_product;
use hecke_trace::residue::trace_residue;
use hecke_trace::roots::{build_type_a, WeightVector};
use hecke_trace::series::eta_series;
use hecke_trace::tesler::{enumerate_tesler, tesler_to_kostant, tesler_weighted_sum};

fn q_minus_1() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (0, -1)])
}

fn lam(coords: &[i64]) -> WeightVector {
    WeightVector::new(coords.to_vec())
}

/// All weights with coordinates in [1, 6] interior to a valley chamber,
/// for the given n.
fn interior_grid(n: usize) -> Vec<WeightVector> {
    (0..n - 1)
        .map(|_| 1i64..=6)
        .multi_cartesian_product()
        .map(WeightVector::new)
        .filter(|l| matches!(classify_chamber(l), ChamberClassification::Interior { .. }))
        .collect()
}

#[test]
fn rank_one_closed_form_all_pipelines() {
    let started = Instant::now();
    let sys = build_type_a(2).unwrap();
    let series = eta_series(2, 20).unwrap();
    for r in 1..=20i64 {
        let expect = &(&LaurentPoly::monomial(-r, 1) * &q_minus_1().pow(2))
            * &q_integer_base(r, 2).unwrap();
        let l = lam(&[r]);
        assert_eq!(trace_kostant(&sys, &l), expect, "kostant, r={r}");
        assert_eq!(trace_residue(2, &l).unwrap(), expect, "residue, r={r}");
        assert_eq!(trace_product(2, &l).unwrap(), expect, "product, r={r}");
        assert_eq!(series.coefficient(&l).unwrap(), expect, "series, r={r}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}, budget 1s");
    println!("PASS rank_one_closed_form_all_pipelines: 20 values x 4 pipelines, {elapsed:?}");
}

#[test]
fn product_formula_matches_kostant_grid() {
    let started = Instant::now();
    let mut cases = 0usize;
    let mut seen_m = BTreeSet::new();
    for n in [3usize, 4, 5] {
        let sys = build_type_a(n).unwrap();
        for l in interior_grid(n) {
            if let ChamberClassification::Interior { m } = classify_chamber(&l) {
                seen_m.insert((n, m));
            }
            assert_eq!(
                trace_product(n, &l).unwrap(),
                trace_kostant(&sys, &l),
                "n={n} lambda=({l})"
            );
            cases += 1;
        }
    }
    // every chamber index occurs in the grid
    for n in [3usize, 4, 5] {
        for m in 1..n {
            assert!(seen_m.contains(&(n, m)), "grid misses n={n} m={m}");
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 2min");
    println!("PASS product_formula_matches_kostant_grid: {cases} interior weights, {elapsed:?}");
}

#[test]
fn residue_formula_matches_kostant_grid() {
    let started = Instant::now();
    let mut cases = 0usize;
    for n in [3usize, 4, 5] {
        let sys = build_type_a(n).unwrap();
        for l in interior_grid(n) {
            // unwrap doubles as the no-NonDivisible assertion: the division
            // by q^n - 1 must be exact on every grid weight
            let got = trace_residue(n, &l).unwrap();
            assert_eq!(got, trace_kostant(&sys, &l), "n={n} lambda=({l})");
            cases += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("PASS residue_formula_matches_kostant_grid: {cases} interior weights, no failed division, {elapsed:?}");
}

#[test]
fn generating_series_matches_kostant() {
    let started = Instant::now();
    let mut cases = 0usize;
    for (n, degree) in [(2usize, 20usize), (3, 8), (4, 6)] {
        let sys = build_type_a(n).unwrap();
        let series = eta_series(n, degree).unwrap();
        for coords in (0..n - 1)
            .map(|_| 0i64..=degree as i64)
            .multi_cartesian_product()
        {
            let l = WeightVector::new(coords);
            if l.total() > degree as i64 {
                continue;
            }
            assert_eq!(
                series.coefficient(&l).unwrap(),
                trace_kostant(&sys, &l),
                "n={n} D={degree} lambda=({l})"
            );
            cases += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 2min");
    println!("PASS generating_series_matches_kostant: {cases} coefficients over 3 truncations, {elapsed:?}");
}

#[test]
fn tesler_bridge_bijection_and_weight_transport() {
    let started = Instant::now();
    let mut vectors = 0usize;
    let mut matrices_total = 0usize;
    for rank in 1..=3usize {
        let n = rank + 1;
        let sys = build_type_a(n).unwrap();
        for b in (0..rank).map(|_| 0i64..=3).multi_cartesian_product() {
            let lambda = WeightVector::from_hooks(&b);
            let matrices = enumerate_tesler(&b);
            let partitions = enumerate_kostant(&sys, &lambda);
            assert_eq!(matrices.len(), partitions.len(), "b={b:?}");

            let image: BTreeSet<KostantPartition> =
                matrices.iter().map(tesler_to_kostant).collect();
            assert_eq!(image.len(), matrices.len(), "injective, b={b:?}");
            let target: BTreeSet<KostantPartition> = partitions.into_iter().collect();
            assert_eq!(image, target, "onto, b={b:?}");

            let sum = tesler_weighted_sum(&b);
            assert_eq!(sum.raw, trace_kostant(&sys, &lambda), "weights, b={b:?}");

            vectors += 1;
            matrices_total += matrices.len();
        }
    }
    let elapsed = started.elapsed();
    println!("PASS tesler_bridge_bijection_and_weight_transport: {vectors} hook vectors, {matrices_total} matrices, {elapsed:?}");
}

#[test]
fn wset_recursions_match_direct_cone_filter() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in 2..=6usize {
        for m in 1..n {
            let rec = wset(n, m).unwrap();
            let direct = wset_direct(n, m).unwrap();
            assert_eq!(rec, direct, "n={n} m={m}");
            assert_eq!(rec.len(), 1 << (n - 1), "cardinality, n={n} m={m}");
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("PASS wset_recursions_match_direct_cone_filter: {checked} (n,m) pairs up to n=6, {elapsed:?}");
}

#[test]
fn structural_invariants_on_grid() {
    let started = Instant::now();
    let mut bar_checked = 0usize;
    for n in [3usize, 4, 5] {
        let sys = build_type_a(n).unwrap();

        // trace of the zero weight is 1
        assert_eq!(trace_kostant(&sys, &lam(&vec![0; n - 1])), LaurentPoly::one());

        // any negative coordinate kills the trace
        for coords in (0..n - 1).map(|_| -2i64..=2).multi_cartesian_product() {
            if coords.iter().all(|&x| x >= 0) {
                continue;
            }
            assert!(trace_kostant(&sys, &WeightVector::new(coords)).is_zero());
        }

        // on the interior grid: invariance under q -> q^-1, and vanishing
        // at q = 1 for nonzero weights
        for l in interior_grid(n) {
            let tau = trace_kostant(&sys, &l);
            assert_eq!(tau.bar(), tau, "bar, n={n} lambda=({l})");
            assert_eq!(tau.eval_at_one(), 0.into(), "q=1, n={n} lambda=({l})");
            bar_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("PASS structural_invariants_on_grid: {bar_checked} weights, {elapsed:?}");
}

#[test]
fn n3_descending_residue_closed_form() {
    // For n = 3 and a1 > a2 >= 1 the residue pipeline reproduces
    // q^(-a1-a2) (q-1)^4 [a2]_{q^3} [2 a1 - a2]_q. The exponent on (q-1)
    // is +4; that reading is certified against the Kostant reference.
    let started = Instant::now();
    let sys = build_type_a(3).unwrap();
    let mut cases = 0usize;
    for a1 in 1..=6i64 {
        for a2 in 1..a1 {
            let l = lam(&[a1, a2]);
            assert!(matches!(
                classify_chamber(&l),
                ChamberClassification::Interior { m: 1 }
            ));
            let expect = &(&(&LaurentPoly::monomial(-a1 - a2, 1) * &q_minus_1().pow(4))
                * &q_integer_base(a2, 3).unwrap())
                * &q_integer(2 * a1 - a2).unwrap();
            assert_eq!(trace_residue(3, &l).unwrap(), expect, "lambda=({l})");
            assert_eq!(trace_kostant(&sys, &l), expect, "oracle, lambda=({l})");
            cases += 1;
        }
    }
    let elapsed = started.elapsed();
    println!("PASS n3_descending_residue_closed_form: {cases} weights, (q-1)^4 reading certified, {elapsed:?}");
}
