//! Kostant partitions of a weight and the trace as a weighted sum over them.
//!
//! This module is the ground truth the other three pipelines are checked
//! against: the trace of the translation element attached to `-lambda` is
//!
//! ```text
//! tau = sum over (r_alpha) in K(lambda) of prod_alpha wt(r_alpha),
//! wt(0) = 1,   wt(r) = q^-r (q-1)^2 [r]_{q^2}   for r >= 1,
//! ```
//!
//! where `K(lambda)` is the set of ways to write `lambda` as a non-negative
//! integer combination of positive roots. Enumeration is exponential in the
//! weight, so the evaluation path is a memoized recursion over root-list
//! suffixes; the plain enumerate-and-sum survives as the oracle in tests.

use std::collections::HashMap;
use std::fmt;

use crate::laurent::{q_integer_base, LaurentPoly};
use crate::roots::{RootSystemA, WeightVector};

/// Multiplicities `(r_alpha)`, indexed in the canonical positive-root order
/// of [`RootSystemA`]. Invariant: `sum r_alpha * alpha` equals the weight
/// the partition was enumerated for.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct KostantPartition {
    multiplicities: Vec<u32>,
}

impl KostantPartition {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        KostantPartition { multiplicities }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Number of nonzero parts.
    pub fn support_size(&self) -> usize {
        self.multiplicities.iter().filter(|&&r| r > 0).count()
    }

    /// Recomputes `sum r_alpha * alpha` in simple-root coordinates.
    pub fn weight(&self, sys: &RootSystemA) -> WeightVector {
        let mut a = vec![0i64; sys.rank()];
        for (root, &r) in sys.positive_roots().iter().zip(&self.multiplicities) {
            for (ak, ck) in a.iter_mut().zip(root.coords()) {
                *ak += i64::from(r) * ck;
            }
        }
        WeightVector::new(a)
    }

    /// The product of entry weights `prod wt(r_alpha)`.
    pub fn weight_product(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for &r in &self.multiplicities {
            if r > 0 {
                acc = &acc * &wt(r);
            }
        }
        acc
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiplicities.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The entry weight `wt(r)`: 1 at `r = 0`, else `q^-r (q-1)^2 [r]_{q^2}`.
/// Fixed by `q -> q^-1`.
pub fn wt(r: u32) -> LaurentPoly {
    if r == 0 {
        return LaurentPoly::one();
    }
    let q_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let base = q_integer_base(i64::from(r), 2).expect("r >= 0");
    &(&LaurentPoly::monomial(-i64::from(r), 1) * &q_minus_1.pow(2)) * &base
}

/// All Kostant partitions of `lambda`, in ascending lexicographic order of
/// the multiplicity vectors. Empty iff `lambda` is outside the positive
/// cone or admits no decomposition.
pub fn enumerate_kostant(sys: &RootSystemA, lambda: &WeightVector) -> Vec<KostantPartition> {
    assert_eq!(lambda.len(), sys.rank(), "weight length must be n-1");
    if !lambda.in_positive_cone() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(sys.positive_roots().len());
    let mut residual = lambda.coords().to_vec();
    enumerate_rec(sys, 0, &mut residual, &mut current, &mut out);
    out
}

fn enumerate_rec(
    sys: &RootSystemA,
    k: usize,
    residual: &mut [i64],
    current: &mut Vec<u32>,
    out: &mut Vec<KostantPartition>,
) {
    let roots = sys.positive_roots();
    if k == roots.len() {
        if residual.iter().all(|&x| x == 0) {
            out.push(KostantPartition::new(current.clone()));
        }
        return;
    }
    // Coordinates left of this root's first endpoint can never be reduced
    // again; dead branch unless they are already zero.
    let (i, j) = roots[k].endpoints();
    if residual[..i - 1].iter().any(|&x| x != 0) {
        return;
    }
    let bound = residual[i - 1..j - 1].iter().copied().min().unwrap_or(0);
    for r in 0..=bound {
        for x in residual[i - 1..j - 1].iter_mut() {
            *x -= r;
        }
        current.push(r as u32);
        enumerate_rec(sys, k + 1, residual, current, out);
        current.pop();
        for x in residual[i - 1..j - 1].iter_mut() {
            *x += r;
        }
    }
}

/// The trace value for `-lambda` by the weighted Kostant sum, evaluated with
/// a memoized recursion over root-list suffixes:
/// `f(k, mu) = sum_r wt(r) * f(k+1, mu - r*alpha_k)`.
///
/// Returns 0 for weights outside the positive cone, 1 for the zero weight.
/// Pure apart from the call-local memo table, so concurrent evaluation over
/// distinct weights is safe.
pub fn trace_kostant(sys: &RootSystemA, lambda: &WeightVector) -> LaurentPoly {
    assert_eq!(lambda.len(), sys.rank(), "weight length must be n-1");
    if !lambda.in_positive_cone() {
        return LaurentPoly::zero();
    }
    let mut memo: HashMap<(usize, Vec<i64>), LaurentPoly> = HashMap::new();
    trace_rec(sys, 0, lambda.coords().to_vec(), &mut memo)
}

fn trace_rec(
    sys: &RootSystemA,
    k: usize,
    residual: Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), LaurentPoly>,
) -> LaurentPoly {
    let roots = sys.positive_roots();
    if k == roots.len() {
        return if residual.iter().all(|&x| x == 0) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        };
    }
    let (i, j) = roots[k].endpoints();
    if residual[..i - 1].iter().any(|&x| x != 0) {
        return LaurentPoly::zero();
    }
    let key = (k, residual);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let residual = &key.1;
    // Type-A roots have 0/1 coordinates, so the multiplicity of this root is
    // capped by the smallest residual coordinate on its support.
    let bound = residual[i - 1..j - 1].iter().copied().min().unwrap_or(0);
    let mut acc = LaurentPoly::zero();
    for r in 0..=bound {
        let mut next = residual.clone();
        for x in next[i - 1..j - 1].iter_mut() {
            *x -= r;
        }
        let tail = trace_rec(sys, k + 1, next, memo);
        if tail.is_zero() {
            continue;
        }
        let term = if r == 0 { tail } else { &wt(r as u32) * &tail };
        acc += &term;
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q_integer_base;
    use crate::roots::build_type_a;
    use itertools::Itertools;

    fn q_minus_1() -> LaurentPoly {
        LaurentPoly::from_terms([(1, 1), (0, -1)])
    }

    /// Enumerate-and-sum, kept deliberately independent of the memoized path.
    fn naive_trace(sys: &RootSystemA, lambda: &WeightVector) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for part in enumerate_kostant(sys, lambda) {
            acc += &part.weight_product();
        }
        if lambda.is_zero() {
            assert_eq!(acc, LaurentPoly::one());
        }
        acc
    }

    #[test]
    fn wt_small_values() {
        assert_eq!(wt(0), LaurentPoly::one());
        // wt(1) = q - 2 + q^-1
        assert_eq!(wt(1), LaurentPoly::from_terms([(1, 1), (0, -2), (-1, 1)]));
        // wt(2) = q^-2 (q-1)^2 (q^2+1), expanded: q^2 - 2q + 2 - 2q^-1 + q^-2
        let product_form = &(&LaurentPoly::monomial(-2, 1) * &q_minus_1().pow(2))
            * &LaurentPoly::from_terms([(2, 1), (0, 1)]);
        assert_eq!(wt(2), product_form);
        assert_eq!(
            wt(2),
            LaurentPoly::from_terms([(2, 1), (1, -2), (0, 2), (-1, -2), (-2, 1)])
        );
    }

    #[test]
    fn wt_is_bar_invariant() {
        for r in 0..=8 {
            assert_eq!(wt(r).bar(), wt(r));
        }
    }

    #[test]
    fn enumerate_n3_examples() {
        let sys = build_type_a(3).unwrap();
        let parts = enumerate_kostant(&sys, &WeightVector::new(vec![1, 1]));
        let vecs: Vec<&[u32]> = parts.iter().map(|p| p.multiplicities()).collect();
        assert_eq!(vecs, vec![&[0, 1, 0][..], &[1, 0, 1][..]]);

        let parts = enumerate_kostant(&sys, &WeightVector::new(vec![2, 1]));
        let vecs: Vec<&[u32]> = parts.iter().map(|p| p.multiplicities()).collect();
        assert_eq!(vecs, vec![&[1, 1, 0][..], &[2, 0, 1][..]]);

        assert!(enumerate_kostant(&sys, &WeightVector::new(vec![1, -1])).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_conservative() {
        let sys = build_type_a(4).unwrap();
        let lam = WeightVector::new(vec![2, 3, 1]);
        let parts = enumerate_kostant(&sys, &lam);
        assert!(parts.windows(2).all(|w| w[0] < w[1]));
        for p in &parts {
            assert_eq!(p.weight(&sys), lam);
        }
    }

    #[test]
    fn trace_zero_weight_is_one() {
        for n in 2..=5 {
            let sys = build_type_a(n).unwrap();
            let zero = WeightVector::new(vec![0; n - 1]);
            assert_eq!(trace_kostant(&sys, &zero), LaurentPoly::one());
        }
    }

    #[test]
    fn trace_outside_cone_is_zero() {
        let sys = build_type_a(3).unwrap();
        assert!(trace_kostant(&sys, &WeightVector::new(vec![1, -1])).is_zero());
    }

    #[test]
    fn n2_closed_form() {
        let sys = build_type_a(2).unwrap();
        for r in 1..=10i64 {
            let expect = &(&LaurentPoly::monomial(-r, 1) * &q_minus_1().pow(2))
                * &q_integer_base(r, 2).unwrap();
            assert_eq!(trace_kostant(&sys, &WeightVector::new(vec![r])), expect);
        }
    }

    #[test]
    fn n3_frozen_value() {
        // lambda = (2,1): wt(2)wt(1) + wt(1)^2 = q^-3 (q-1)^4 (q^2+q+1).
        let sys = build_type_a(3).unwrap();
        let got = trace_kostant(&sys, &WeightVector::new(vec![2, 1]));
        let expect = &(&LaurentPoly::monomial(-3, 1) * &q_minus_1().pow(4))
            * &LaurentPoly::from_terms([(2, 1), (1, 1), (0, 1)]);
        assert_eq!(got, expect);
        assert_eq!(got, &wt(2) * &wt(1) + &wt(1) * &wt(1));
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        for n in 2..=4usize {
            let sys = build_type_a(n).unwrap();
            for coords in (0..n - 1).map(|_| 0i64..=4).multi_cartesian_product() {
                let lam = WeightVector::new(coords);
                assert_eq!(
                    trace_kostant(&sys, &lam),
                    naive_trace(&sys, &lam),
                    "lambda = ({lam})"
                );
            }
        }
    }

    #[test]
    fn trace_is_bar_invariant_and_vanishes_at_q1() {
        let sys = build_type_a(3).unwrap();
        for a1 in 0..=3i64 {
            for a2 in 0..=3i64 {
                let lam = WeightVector::new(vec![a1, a2]);
                let tau = trace_kostant(&sys, &lam);
                assert_eq!(tau.bar(), tau);
                let at_one = tau.eval_at_one();
                if lam.is_zero() {
                    assert_eq!(at_one, 1.into());
                } else {
                    assert_eq!(at_one, 0.into());
                }
            }
        }
    }
}
