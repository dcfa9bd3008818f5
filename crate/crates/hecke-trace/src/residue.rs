//! The permutation-indexed residue evaluation of the trace.
//!
//! For a weight interior to the valley chamber `a^m`, the trace is
//!
//! ```text
//! tau = [ sum over w in W(m, n) of (-1)^eps(w) q^(e_w) ] * (q-1)^n / (q^n - 1),
//! ```
//!
//! where `eps(w)` counts the simple roots sent to positive roots (ascents
//! of the one-line word) and `e_w = -sum_i a_i (w^-1(i+1) - w^-1(i))`. The
//! division by `q^n - 1` is exact whenever the upstream algebra is intact,
//! so a `NonDivisible` out of this module is a correctness failure, not an
//! input error.

use crate::chambers::{classify_chamber, wset, ChamberClassification};
use crate::laurent::LaurentPoly;
use crate::perm::Permutation;
use crate::roots::WeightVector;
use crate::Error;

/// Count of simple roots mapped to positive roots by `w`: the ascents of
/// the one-line word.
pub fn epsilon(w: &Permutation) -> usize {
    w.ascents()
}

/// The exponent `e` with `q^e` the evaluation of the weight at the residual
/// point of `w`: `e = -sum_i a_i (w^-1(i+1) - w^-1(i))`.
pub fn pw_exponent(w: &Permutation, lambda: &WeightVector) -> i64 {
    let a = lambda.coords();
    let mut e = 0i64;
    for (idx, &ai) in a.iter().enumerate() {
        let i = idx + 1;
        let gap = w.apply_inverse(i + 1) as i64 - w.apply_inverse(i) as i64;
        e -= ai * gap;
    }
    e
}

/// The common rational factor `(q-1)^n / (q^n - 1)` as an exact
/// numerator/denominator pair. It is never evaluated as a standalone
/// quotient; the single division happens after the residue sum is
/// accumulated.
pub fn omega(n: usize) -> (LaurentPoly, LaurentPoly) {
    let q_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let num = q_minus_1.pow(n as u32);
    let den = LaurentPoly::from_terms([(n as i64, 1), (0, -1)]);
    (num, den)
}

/// One summand of the residue formula, exposed for verbose reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueTerm {
    pub perm: Permutation,
    /// `(-1)^eps(w)`.
    pub sign: i8,
    /// The power of `q` contributed by the residual point of `w`.
    pub exponent: i64,
}

/// The residue summands for an interior weight, in canonical permutation
/// order. Fails with `NotInChamberInterior` on boundary or irregular
/// weights.
pub fn residue_terms(n: usize, lambda: &WeightVector) -> Result<Vec<ResidueTerm>, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if lambda.len() != n - 1 {
        return Err(Error::InvalidInput(format!(
            "weight has {} coordinates, expected {}",
            lambda.len(),
            n - 1
        )));
    }
    let m = match classify_chamber(lambda) {
        ChamberClassification::Interior { m } => m,
        other => return Err(Error::NotInChamberInterior(format!("({lambda}) is {other}"))),
    };
    let terms = wset(n, m)?
        .into_iter()
        .map(|w| {
            let sign = if epsilon(&w).is_multiple_of(2) { 1 } else { -1 };
            let exponent = pw_exponent(&w, lambda);
            ResidueTerm { perm: w, sign, exponent }
        })
        .collect();
    Ok(terms)
}

/// Evaluates the trace by the residue formula. Terms may be accumulated in
/// any order (commutative addition); the result is deterministic.
pub fn trace_residue(n: usize, lambda: &WeightVector) -> Result<LaurentPoly, Error> {
    let mut sum = LaurentPoly::zero();
    for term in residue_terms(n, lambda)? {
        sum += &LaurentPoly::monomial(term.exponent, i64::from(term.sign));
    }
    let (num, den) = omega(n);
    (&sum * &num).exact_div(&den)
}
