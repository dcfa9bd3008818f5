//! Type A(n-1) root-system data in simple-root coordinates.
//!
//! The positive roots are `alpha_{i,j} = e_i - e_j` for `1 <= i < j <= n`,
//! so `alpha_{i,j} = alpha_i + ... + alpha_{j-1}` and its coordinate vector
//! in the simple-root basis is the 0/1 indicator of the interval
//! `[i, j-1]`. Simple-root coordinates are the universal representation
//! throughout the crate; ambient Z^n vectors never appear in code.

use std::fmt;

use crate::Error;

/// One positive root `alpha_{i,j}`, `1 <= i < j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootVector {
    i: usize,
    j: usize,
    coords: Vec<i64>,
}

impl RootVector {
    /// Root `alpha_{i,j}` inside `A_{n-1}`.
    pub fn new(n: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j && j <= n, "bad root endpoints ({i},{j}) for n={n}");
        let coords = (1..n).map(|k| i64::from(i <= k && k < j)).collect();
        RootVector { i, j, coords }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Coordinates in the simple-root basis (length n-1).
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.i, self.j)
    }
}

/// The `A_{n-1}` positive-root set, in the canonical order
/// `(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)`.
#[derive(Clone, Debug)]
pub struct RootSystemA {
    n: usize,
    positive_roots: Vec<RootVector>,
}

/// Builds the `A_{n-1}` root system.
pub fn build_type_a(n: usize) -> Result<RootSystemA, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let mut positive_roots = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..n {
        for j in (i + 1)..=n {
            positive_roots.push(RootVector::new(n, i, j));
        }
    }
    Ok(RootSystemA { n, positive_roots })
}

impl RootSystemA {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the system, `n - 1`; also the coordinate length.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }
}

/// A weight `lambda = sum a_k alpha_k` as its integer coordinate vector in
/// the simple-root basis. No intrinsic sign constraint; consumers check
/// positive-cone membership where the formulas require it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    a: Vec<i64>,
}

impl WeightVector {
    pub fn new(a: Vec<i64>) -> Self {
        WeightVector { a }
    }

    /// Converts a hook-sum vector `b` to simple-root coordinates via prefix
    /// sums: `a_j = b_1 + ... + b_j`.
    pub fn from_hooks(b: &[i64]) -> Self {
        let mut a = Vec::with_capacity(b.len());
        let mut acc = 0i64;
        for &bi in b {
            acc += bi;
            a.push(acc);
        }
        WeightVector { a }
    }

    /// Inverse of [`from_hooks`](Self::from_hooks): `b_j = a_j - a_{j-1}`.
    pub fn to_hooks(&self) -> Vec<i64> {
        let mut b = Vec::with_capacity(self.a.len());
        let mut prev = 0i64;
        for &ai in &self.a {
            b.push(ai - prev);
            prev = ai;
        }
        b
    }

    pub fn coords(&self) -> &[i64] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The `n` of the ambient `A_{n-1}` system.
    pub fn n(&self) -> usize {
        self.a.len() + 1
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// True iff the weight lies in the positive root cone `Q+`
    /// (every coordinate non-negative).
    pub fn in_positive_cone(&self) -> bool {
        self.a.iter().all(|&x| x >= 0)
    }

    /// Sum of coordinates; the total degree of the weight as a series
    /// exponent.
    pub fn total(&self) -> i64 {
        self.a.iter().sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
