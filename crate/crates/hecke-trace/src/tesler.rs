//! Tesler matrices, their bijection with Kostant partitions, and the
//! weighted-sum identity with the trace.
//!
//! An `(n-1) x (n-1)` upper-triangular matrix of non-negative integers has
//! hook sums `b_i = sum_{j >= i} m_ij - sum_{j < i} m_ji`. Matrices with
//! hook-sum vector `b` biject with Kostant partitions of
//! `lambda(b) = sum_i b_i a[i,n]`: off-diagonal entries `m_ij` are the
//! multiplicities of `a[i,j]`, diagonal entries `m_ii` those of `a[i,n]`.
//! Entry weights transport through the bijection, so the weighted matrix
//! sum equals the trace at `lambda(b)` exactly.
//!
//! Only the one-variable specialization of the two-variable entry weight is
//! implemented; at that specialization the entry weight coincides with
//! [`wt`], which tests assert by expanding
//! `-(1-q)(1-t)(q^m - t^m)/(q-t)` at `t = q^-1` for small `m`.

use std::fmt;

use crate::kostant::{wt, KostantPartition};
use crate::laurent::LaurentPoly;
use crate::roots::WeightVector;

/// Upper-triangular non-negative integer matrix; rows and columns are
/// 1-based in the math, 0-based in storage.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TeslerMatrix {
    entries: Vec<Vec<u32>>,
}

impl TeslerMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Self {
        let r = entries.len();
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), r, "matrix must be square");
            assert!(
                row[..i].iter().all(|&x| x == 0),
                "matrix must be upper triangular"
            );
        }
        TeslerMatrix { entries }
    }

    /// Side length `n - 1`.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// Hook sums `b_i = sum_{j>=i} m_ij - sum_{j<i} m_ji`.
    pub fn hook_sums(&self) -> Vec<i64> {
        let r = self.size();
        (0..r)
            .map(|i| {
                let row: i64 = (i..r).map(|j| i64::from(self.entries[i][j])).sum();
                let col: i64 = (0..i).map(|j| i64::from(self.entries[j][i])).sum();
                row - col
            })
            .collect()
    }

    /// Product of entry weights over the whole upper triangle.
    pub fn weight(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let r = self.size();
        for i in 0..r {
            for j in i..r {
                let m = self.entries[i][j];
                if m > 0 {
                    acc = &acc * &wt(m);
                }
            }
        }
        acc
    }

    /// Row-major flattening of the upper triangle, used for the canonical
    /// lexicographic order.
    fn flat_upper(&self) -> Vec<u32> {
        let r = self.size();
        let mut v = Vec::with_capacity(r * (r + 1) / 2);
        for i in 0..r {
            v.extend_from_slice(&self.entries[i][i..]);
        }
        v
    }
}

impl fmt::Display for TeslerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// All Tesler matrices with hook-sum vector `b`, in row-major lexicographic
/// order of their entries. Empty when no matrix exists (e.g. a negative
/// leading hook sum).
pub fn enumerate_tesler(b: &[i64]) -> Vec<TeslerMatrix> {
    let r = b.len();
    let mut out = Vec::new();
    let mut entries = vec![vec![0u32; r]; r];
    fill_rows(b, 0, &mut entries, &mut out);
    out.sort_by_key(|m| m.flat_upper());
    out
}

fn fill_rows(b: &[i64], i: usize, entries: &mut Vec<Vec<u32>>, out: &mut Vec<TeslerMatrix>) {
    let r = b.len();
    if i == r {
        out.push(TeslerMatrix::new(entries.clone()));
        return;
    }
    // Row i must sum to b_i plus the column sum already fixed above it.
    let col_above: i64 = (0..i).map(|j| i64::from(entries[j][i])).sum();
    let target = b[i] + col_above;
    if target < 0 {
        return;
    }
    fill_offdiag(b, i, i + 1, target, entries, out);
}

fn fill_offdiag(
    b: &[i64],
    i: usize,
    j: usize,
    remaining: i64,
    entries: &mut Vec<Vec<u32>>,
    out: &mut Vec<TeslerMatrix>,
) {
    let r = b.len();
    if j == r {
        entries[i][i] = remaining as u32;
        fill_rows(b, i + 1, entries, out);
        entries[i][i] = 0;
        return;
    }
    for v in 0..=remaining {
        entries[i][j] = v as u32;
        fill_offdiag(b, i, j + 1, remaining - v, entries, out);
    }
    entries[i][j] = 0;
}

/// The bijection to Kostant partitions of `lambda(b)` inside `A_{n-1}` with
/// `n = size + 1`: multiplicities in the canonical root order, reading
/// `m_ij` for roots `a[i,j]` with `j < n` and `m_ii` for `a[i,n]`.
pub fn tesler_to_kostant(m: &TeslerMatrix) -> KostantPartition {
    let n = m.size() + 1;
    let mut mult = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in (i + 1)..=n {
            if j < n {
                mult.push(m.entry(i - 1, j - 1));
            } else {
                mult.push(m.entry(i - 1, i - 1));
            }
        }
    }
    KostantPartition::new(mult)
}

/// The weighted sum over `T(b)` together with its divided form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeslerSum {
    /// `sum_M prod wt(m_ij)`; always defined, equals the trace at
    /// `lambda(b)`.
    pub raw: LaurentPoly,
    /// `raw / ((q-1)(q^-1 - 1))^(n-1)` when that division is exact,
    /// `None` otherwise. Exactness is guaranteed when every Kostant
    /// partition of `lambda(b)` has at least `n-1` nonzero parts.
    pub divided: Option<LaurentPoly>,
}

impl TeslerSum {
    /// True when the divided form does not exist.
    pub fn non_divisible(&self) -> bool {
        self.divided.is_none()
    }
}

/// Computes the raw weighted sum and attempts the exact division by
/// `((q-1)(q^-1 - 1))^(n-1)`.
pub fn tesler_weighted_sum(b: &[i64]) -> TeslerSum {
    let mut raw = LaurentPoly::zero();
    for m in enumerate_tesler(b) {
        raw += &m.weight();
    }
    let q_minus_1 = LaurentPoly::from_terms([(1, 1), (0, -1)]);
    let qinv_minus_1 = LaurentPoly::from_terms([(-1, 1), (0, -1)]);
    let den = (&q_minus_1 * &qinv_minus_1).pow(b.len() as u32);
    let divided = raw.exact_div(&den).ok();
    TeslerSum { raw, divided }
}

/// `lambda(b)`: the weight whose trace the sum over `T(b)` computes.
pub fn lambda_of_hooks(b: &[i64]) -> WeightVector {
    WeightVector::from_hooks(b)
}
