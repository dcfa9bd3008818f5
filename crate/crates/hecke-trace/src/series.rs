//! Truncated power-series expansion of the trace generating function.
//!
//! The generating function is the product over positive roots of
//!
//! ```text
//! (1 - t(alpha))^2 / ((1 - q^-1 t(alpha)) (1 - q t(alpha))),
//! ```
//!
//! expanded with each denominator factor as a geometric series. Writing
//! `T^v` for the monomial with exponent vector `v` (the simple-root
//! coordinates of `alpha`), each root contributes the three factors
//! `(1 - T^v)^2`, `sum_i q^i T^(iv)` and `sum_j q^-j T^(jv)`. The
//! coefficient of `T^lambda` in the product is the trace at `lambda`.
//! This is the definition-level pipeline, so the factors are built and
//! multiplied literally here rather than through any of the other modules.
//!
//! Multiplication is dense over the simplex of exponent vectors of total
//! degree at most the cap, truncating after every factor to bound memory;
//! geometric factors are instantiated only up to `cap / |v|` terms.

use std::collections::BTreeMap;

use crate::laurent::LaurentPoly;
use crate::roots::{build_type_a, WeightVector};
use crate::Error;

/// A multivariate power series in `n-1` variables, truncated at a total
/// degree cap, with Laurent-polynomial coefficients. Absent keys are zero;
/// stored keys always respect the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    n: usize,
    degree_cap: usize,
    coeffs: BTreeMap<Vec<u32>, LaurentPoly>,
}

impl TruncatedSeries {
    fn constant_one(n: usize, degree_cap: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0u32; n - 1], LaurentPoly::one());
        TruncatedSeries { n, degree_cap, coeffs }
    }

    fn empty(n: usize, degree_cap: usize) -> Self {
        TruncatedSeries { n, degree_cap, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Number of stored (nonzero) coefficients.
    pub fn num_coeffs(&self) -> usize {
        self.coeffs.len()
    }

    fn insert_add(&mut self, key: Vec<u32>, value: LaurentPoly) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(slot) => {
                *slot += &value;
                if slot.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, value);
            }
        }
    }

    fn mul_truncated(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.n, rhs.n);
        debug_assert_eq!(self.degree_cap, rhs.degree_cap);
        let cap = self.degree_cap as u32;
        let mut out = TruncatedSeries::empty(self.n, self.degree_cap);
        for (k1, c1) in &self.coeffs {
            let d1: u32 = k1.iter().sum();
            for (k2, c2) in &rhs.coeffs {
                let d2: u32 = k2.iter().sum();
                if d1 + d2 > cap {
                    continue;
                }
                let key: Vec<u32> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.insert_add(key, c1 * c2);
            }
        }
        out
    }

    /// The same series with a lower cap (drops higher-degree terms).
    pub fn truncated(&self, degree_cap: usize) -> TruncatedSeries {
        assert!(degree_cap <= self.degree_cap);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(k, _)| k.iter().map(|&x| x as usize).sum::<usize>() <= degree_cap)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        TruncatedSeries { n: self.n, degree_cap, coeffs }
    }

    /// The stored coefficient at `lambda` (zero when absent). Weights
    /// outside the positive cone are identically zero; weights beyond the
    /// cap are an [`Error::OutOfTruncation`].
    pub fn coefficient(&self, lambda: &WeightVector) -> Result<LaurentPoly, Error> {
        if lambda.len() != self.n - 1 {
            return Err(Error::InvalidInput(format!(
                "weight has {} coordinates, expected {}",
                lambda.len(),
                self.n - 1
            )));
        }
        if !lambda.in_positive_cone() {
            return Ok(LaurentPoly::zero());
        }
        let needed = lambda.total();
        if needed > self.degree_cap as i64 {
            return Err(Error::OutOfTruncation { needed, cap: self.degree_cap });
        }
        let key: Vec<u32> = lambda.coords().iter().map(|&x| x as u32).collect();
        Ok(self.coeffs.get(&key).cloned().unwrap_or_else(LaurentPoly::zero))
    }
}

/// Alias for [`TruncatedSeries::coefficient`] matching the operation name
/// used elsewhere in the crate.
pub fn series_coefficient(s: &TruncatedSeries, lambda: &WeightVector) -> Result<LaurentPoly, Error> {
    s.coefficient(lambda)
}

/// Expands the generating function for `A_{n-1}` up to total degree
/// `degree`. Cost grows quickly with the cap; callers gate it by
/// configuration.
pub fn eta_series(n: usize, degree: usize) -> Result<TruncatedSeries, Error> {
    let sys = build_type_a(n)?;
    let mut acc = TruncatedSeries::constant_one(n, degree);
    for root in sys.positive_roots() {
        let v: Vec<u32> = root.coords().iter().map(|&x| x as u32).collect();
        let step: u32 = v.iter().sum();
        let reps = degree as u32 / step;

        // (1 - T^v)^2 = 1 - 2 T^v + T^2v, truncated.
        let mut numerator = TruncatedSeries::empty(n, degree);
        numerator.insert_add(vec![0; n - 1], LaurentPoly::one());
        if step <= degree as u32 {
            numerator.insert_add(v.clone(), LaurentPoly::constant(-2));
        }
        if 2 * step <= degree as u32 {
            let key: Vec<u32> = v.iter().map(|x| 2 * x).collect();
            numerator.insert_add(key, LaurentPoly::one());
        }

        let mut geom_up = TruncatedSeries::empty(n, degree);
        let mut geom_down = TruncatedSeries::empty(n, degree);
        for i in 0..=reps {
            let key: Vec<u32> = v.iter().map(|x| i * x).collect();
            geom_up.insert_add(key.clone(), LaurentPoly::monomial(i64::from(i), 1));
            geom_down.insert_add(key, LaurentPoly::monomial(-i64::from(i), 1));
        }

        acc = acc.mul_truncated(&numerator);
        acc = acc.mul_truncated(&geom_up);
        acc = acc.mul_truncated(&geom_down);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::trace_kostant;
    use crate::laurent::q_integer_base;
    use itertools::Itertools;

    fn lam(coords: &[i64]) -> WeightVector {
        WeightVector::new(coords.to_vec())
    }

    #[test]
    fn rank_one_coefficients_match_closed_form() {
        let s = eta_series(2, 12).unwrap();
        assert_eq!(s.coefficient(&lam(&[0])).unwrap(), LaurentPoly::one());
        let q_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
        for r in 1..=12i64 {
            let expect = &(&LaurentPoly::monomial(-r, 1) * &q_minus_1.pow(2))
                * &q_integer_base(r, 2).unwrap();
            assert_eq!(s.coefficient(&lam(&[r])).unwrap(), expect, "r = {r}");
        }
    }

    #[test]
    fn rank_one_specific_value() {
        // coefficient at exponent 2: q^-2 (q-1)^2 (q^2 + 1)
        let s = eta_series(2, 4).unwrap();
        let expect = LaurentPoly::from_terms([(2, 1), (1, -2), (0, 2), (-1, -2), (-2, 1)]);
        assert_eq!(s.coefficient(&lam(&[2])).unwrap(), expect);
        // and at exponent 1: q - 2 + q^-1
        let expect = LaurentPoly::from_terms([(1, 1), (0, -2), (-1, 1)]);
        assert_eq!(s.coefficient(&lam(&[1])).unwrap(), expect);
    }

    #[test]
    fn n3_coefficient_matches_kostant() {
        let s = eta_series(3, 5).unwrap();
        let sys = crate::roots::build_type_a(3).unwrap();
        for coords in (0..2).map(|_| 0i64..=2).multi_cartesian_product() {
            let l = lam(&coords);
            assert_eq!(
                s.coefficient(&l).unwrap(),
                trace_kostant(&sys, &l),
                "lambda = ({l})"
            );
        }
    }

    #[test]
    fn outside_cone_is_zero() {
        let s = eta_series(3, 4).unwrap();
        assert!(s.coefficient(&lam(&[1, -1])).unwrap().is_zero());
    }

    #[test]
    fn truncation_error() {
        let s = eta_series(2, 4).unwrap();
        assert_eq!(
            s.coefficient(&lam(&[5])),
            Err(Error::OutOfTruncation { needed: 5, cap: 4 })
        );
    }

    #[test]
    fn truncation_consistency() {
        let big = eta_series(3, 6).unwrap();
        let small = eta_series(3, 4).unwrap();
        assert_eq!(big.truncated(4), small);
    }
}
