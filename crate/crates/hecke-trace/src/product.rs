//! Closed product formula for the trace on valley-chamber weights.
//!
//! For `a_1 > ... > a_{n-m} < ... < a_{n-1}` with positive minimum:
//!
//! ```text
//! tau = q^(-sum a_i) (q-1)^(2(n-1)) [a_{n-m}]_{q^n}
//!       * prod_{i=1}^{n-m-1} [(i+1) a_i - i a_{i+1}]_q
//!       * prod_{j=1}^{m-1}   [(j+1) a_{n-j} - j a_{n-j-1}]_q.
//! ```
//!
//! At `m = 1` the second product is empty, at `m = n-1` the first. The
//! strict chain makes every q-integer index positive:
//! `(i+1) a_i - i a_{i+1} = a_i + i (a_i - a_{i+1}) > 0`, and symmetrically
//! on the increasing side.

use crate::chambers::{classify_chamber, ChamberClassification};
use crate::laurent::{q_integer, q_integer_base, LaurentPoly};
use crate::roots::WeightVector;
use crate::Error;

/// Evaluates the closed product. The chamber index `m` is always recomputed
/// from the weight; boundary weights (weak chains or a zero minimum) are
/// refused with `NotInChamberInterior` rather than extrapolated, and
/// callers fall back to the Kostant sum for those.
pub fn trace_product(n: usize, lambda: &WeightVector) -> Result<LaurentPoly, Error> {
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
    let a = lambda.coords();
    let q_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let mut acc = &LaurentPoly::monomial(-lambda.total(), 1) * &q_minus_1.pow(2 * (n as u32 - 1));
    let turn = a[n - m - 1];
    debug_assert!(turn > 0, "interior chamber has positive minimum");
    acc = &acc * &q_integer_base(turn, n as u32)?;
    for i in 1..=(n - m - 1) {
        let idx = (i as i64 + 1) * a[i - 1] - (i as i64) * a[i];
        debug_assert!(idx > 0, "descending factor index must be positive");
        acc = &acc * &q_integer(idx)?;
    }
    for j in 1..=(m - 1) {
        let idx = (j as i64 + 1) * a[n - j - 1] - (j as i64) * a[n - j - 2];
        debug_assert!(idx > 0, "ascending factor index must be positive");
        acc = &acc * &q_integer(idx)?;
    }
    Ok(acc)
}
