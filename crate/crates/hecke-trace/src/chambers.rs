//! Valley chambers of the positive root cone and the permutation sets
//! attached to them.
//!
//! For each `m` in `[1, n-1]` the closed cone
//!
//! ```text
//! a^m = { a_1 >= a_2 >= ... >= a_{n-m} <= a_{n-m+1} <= ... <= a_{n-1} }
//! ```
//!
//! (coordinates in the simple-root basis) is simplicial, spanned by the
//! roots `a[1,2], ..., a[1,n-m], a[n-1,n], ..., a[n-m+1,n], a[1,n]`, and its
//! interior is a connected component of the regular vectors of the cone:
//! a weight strictly decreasing then strictly increasing, with a positive
//! minimum, cannot be written with fewer than `n-1` positive roots.
//!
//! The permutation set `W(m, n)` consists of the `w` in `S_n` whose root
//! basis `|w a_1|, ..., |w a_{n-1}|` spans a cone containing `a^m`. It has
//! two constructions here: a brute-force filter of all of `S_n` by exact
//! cone containment ([`wset_direct`]), and the doubling recursions
//! ([`wset`]) that halve the problem by splitting off the longest element.
//! They agree, and both have cardinality `2^(n-1)`.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::perm::Permutation;
use crate::roots::{RootVector, WeightVector};
use crate::Error;

/// Identifies the valley chamber `a^m` inside `A_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChamberLabel {
    n: usize,
    m: usize,
}

impl ChamberLabel {
    pub fn new(n: usize, m: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if m < 1 || m > n - 1 {
            return Err(Error::OutOfRange { n, m });
        }
        Ok(ChamberLabel { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The simplicial generator list
    /// `a[1,2], ..., a[1,n-m], a[n-1,n], ..., a[n-m+1,n], a[1,n]`.
    pub fn generators(&self) -> Vec<RootVector> {
        let (n, m) = (self.n, self.m);
        let mut gens = Vec::with_capacity(n - 1);
        for j in 2..=(n - m) {
            gens.push(RootVector::new(n, 1, j));
        }
        for i in ((n - m + 1)..=(n - 1)).rev() {
            gens.push(RootVector::new(n, i, n));
        }
        gens.push(RootVector::new(n, 1, n));
        gens
    }
}

/// Where a weight sits relative to the valley-chamber family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChamberClassification {
    /// Strict valley with positive minimum; `m` is unique.
    Interior { m: usize },
    /// In the positive cone, on the boundary of the listed chambers
    /// (weak chains only, or a zero minimum).
    Boundary { ms: Vec<usize> },
    /// Some coordinate is negative.
    OutsidePositiveCone,
    /// In the positive cone but in no chamber of the family
    /// (the coordinate profile is not valley-shaped).
    InsideConeNoChamber,
}

/// Classifies a weight against every chamber of the family. Statuses are
/// exhaustive and mutually exclusive.
pub fn classify_chamber(lambda: &WeightVector) -> ChamberClassification {
    if !lambda.in_positive_cone() {
        return ChamberClassification::OutsidePositiveCone;
    }
    let a = lambda.coords();
    let n = lambda.n();
    let mut interior = None;
    let mut weak = Vec::new();
    for m in 1..=(n - 1) {
        let turn = n - m - 1; // 0-based index of a_{n-m}
        let weak_ok = (0..turn).all(|k| a[k] >= a[k + 1])
            && (turn..n - 2).all(|k| a[k] <= a[k + 1]);
        if weak_ok {
            weak.push(m);
            let strict = (0..turn).all(|k| a[k] > a[k + 1])
                && (turn..n - 2).all(|k| a[k] < a[k + 1])
                && a[turn] > 0;
            if strict {
                debug_assert!(interior.is_none(), "interior m must be unique");
                interior = Some(m);
            }
        }
    }
    if let Some(m) = interior {
        return ChamberClassification::Interior { m };
    }
    if !weak.is_empty() {
        return ChamberClassification::Boundary { ms: weak };
    }
    ChamberClassification::InsideConeNoChamber
}

impl std::fmt::Display for ChamberClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChamberClassification::Interior { m } => write!(f, "interior m={m}"),
            ChamberClassification::Boundary { ms } => {
                let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                write!(f, "boundary {{{}}}", parts.join(","))
            }
            ChamberClassification::OutsidePositiveCone => write!(f, "outside positive cone"),
            ChamberClassification::InsideConeNoChamber => {
                write!(f, "inside positive cone, no valley chamber")
            }
        }
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Exact test: does the closed cone spanned by `basis` contain the chamber?
///
/// True iff every chamber generator has non-negative coordinates when
/// expressed in `basis`, decided by Cramer's rule over big integers. The
/// basis must consist of `n-1` independent vectors; dependence is reported
/// as [`Error::SingularBasis`].
pub fn cone_contains_chamber(label: &ChamberLabel, basis: &[RootVector]) -> Result<bool, Error> {
    let rank = label.n - 1;
    if basis.len() != rank {
        return Err(Error::InvalidInput(format!(
            "expected {rank} basis vectors, got {}",
            basis.len()
        )));
    }
    // Columns are the basis vectors.
    let matrix: Vec<Vec<BigInt>> = (0..rank)
        .map(|row| basis.iter().map(|v| BigInt::from(v.coords()[row])).collect())
        .collect();
    let det = bareiss_det(matrix.clone());
    if det.is_zero() {
        return Err(Error::SingularBasis);
    }
    for gen in label.generators() {
        for col in 0..rank {
            let mut replaced = matrix.clone();
            for (row, item) in replaced.iter_mut().enumerate() {
                item[col] = BigInt::from(gen.coords()[row]);
            }
            let det_col = bareiss_det(replaced);
            // x_col = det_col / det; only the sign matters.
            if !det_col.is_zero() && det_col.is_negative() != det.is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The root basis `|w a_1|, ..., |w a_{n-1}|` attached to a permutation:
/// `w` sends the simple root `a_i = e_i - e_{i+1}` to
/// `e_{w(i)} - e_{w(i+1)}`, and `|.|` flips to the positive root.
pub fn permuted_simple_roots(w: &Permutation) -> Vec<RootVector> {
    let n = w.n();
    (1..n)
        .map(|i| {
            let (a, b) = (w.apply(i), w.apply(i + 1));
            RootVector::new(n, a.min(b), a.max(b))
        })
        .collect()
}

/// `W(m, n)` by definition: filter all of `S_n` through the exact cone
/// containment test.
pub fn wset_direct(n: usize, m: usize) -> Result<BTreeSet<Permutation>, Error> {
    let label = ChamberLabel::new(n, m)?;
    let mut out = BTreeSet::new();
    for line in (1..=n).permutations(n) {
        let w = Permutation::new(line).expect("valid permutation");
        let basis = permuted_simple_roots(&w);
        // A permuted simple-root basis is a path on n vertices, hence
        // always independent; SingularBasis cannot fire here.
        if cone_contains_chamber(&label, &basis)? {
            out.insert(w);
        }
    }
    Ok(out)
}

/// `W(m, n)` by the doubling recursions. Base case: both elements of `S_2`.
///
/// - `m = 1`: embed `W(1, n-1)` fixing the letter `n`, then adjoin the
///   right-translates by the longest element;
/// - `m = n-1`: embed `W(n-2, n-1)` on the letters `2..n`, same doubling;
/// - otherwise: block-join `W(1, n-m) x W(m-1, m)` on `1..n-m` and
///   `n-m+1..n`, same doubling.
pub fn wset(n: usize, m: usize) -> Result<BTreeSet<Permutation>, Error> {
    ChamberLabel::new(n, m)?;
    Ok(wset_rec(n, m))
}

fn wset_rec(n: usize, m: usize) -> BTreeSet<Permutation> {
    if n == 2 {
        return BTreeSet::from([Permutation::identity(2), Permutation::longest(2)]);
    }
    let halves: Vec<Permutation> = if m == 1 {
        wset_rec(n - 1, 1)
            .iter()
            .map(Permutation::extend_fixing_last)
            .collect()
    } else if m == n - 1 {
        wset_rec(n - 1, n - 2)
            .iter()
            .map(Permutation::shift_up_fixing_first)
            .collect()
    } else {
        let left = wset_rec(n - m, 1);
        let right = wset_rec(m, m - 1);
        left.iter()
            .cartesian_product(right.iter())
            .map(|(u, v)| u.block_join(v))
            .collect()
    };
    let mut out = BTreeSet::new();
    for w in halves {
        out.insert(w.times_longest());
        out.insert(w);
    }
    out
}
