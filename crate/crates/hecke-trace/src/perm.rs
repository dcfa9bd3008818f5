//! Permutations of `{1..n}` in one-line notation, with the handful of
//! operations the chamber and residue machinery needs.

use std::fmt;

use crate::Error;

/// An element of `S_n`; `one_line[i-1] = w(i)`, values `1..=n`.
/// The inverse is cached at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
    inv: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, Error> {
        let n = one_line.len();
        let mut inv = vec![0usize; n];
        let mut seen = vec![false; n];
        for (pos, &v) in one_line.iter().enumerate() {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of 1..={n}: {one_line:?}"
                )));
            }
            seen[v - 1] = true;
            inv[v - 1] = pos + 1;
        }
        Ok(Permutation { one_line, inv })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::new((1..=n).collect()).unwrap()
    }

    /// The longest element `w0`, `i -> n+1-i`.
    pub fn longest(n: usize) -> Self {
        Permutation::new((1..=n).rev().collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// `w^-1(i)`, 1-based.
    pub fn apply_inverse(&self, i: usize) -> usize {
        self.inv[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Right multiplication by the longest element; in one-line notation
    /// this reverses the word.
    pub fn times_longest(&self) -> Self {
        let mut rev = self.one_line.clone();
        rev.reverse();
        Permutation::new(rev).unwrap()
    }

    /// Conjugation `w0 * w * w0`, i.e. the reverse-complement
    /// `i -> n+1-w(n+1-i)`.
    pub fn conjugate_by_longest(&self) -> Self {
        let n = self.n();
        let line = (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect();
        Permutation::new(line).unwrap()
    }

    /// Number of ascents `w(i) < w(i+1)`, `1 <= i <= n-1`.
    pub fn ascents(&self) -> usize {
        self.one_line.windows(2).filter(|w| w[0] < w[1]).count()
    }

    /// Embeds into `S_{n+1}` fixing the new last letter.
    pub fn extend_fixing_last(&self) -> Self {
        let mut line = self.one_line.clone();
        line.push(self.n() + 1);
        Permutation::new(line).unwrap()
    }

    /// Embeds into `S_{n+1}` as a permutation of `{2..n+1}` fixing 1.
    pub fn shift_up_fixing_first(&self) -> Self {
        let mut line = vec![1usize];
        line.extend(self.one_line.iter().map(|v| v + 1));
        Permutation::new(line).unwrap()
    }

    /// Block join: `self` acts on `1..=k`, `other` on `k+1..=k+m`.
    pub fn block_join(&self, other: &Permutation) -> Self {
        let k = self.n();
        let mut line = self.one_line.clone();
        line.extend(other.one_line.iter().map(|v| v + k));
        Permutation::new(line).unwrap()
    }
}

/// Compact one-line rendering: digits when `n <= 9` ("213"), otherwise
/// comma-separated.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let w = Permutation::new(vec![3, 1, 4, 2]).unwrap();
        for i in 1..=4 {
            assert_eq!(w.apply_inverse(w.apply(i)), i);
            assert_eq!(w.apply(w.apply_inverse(i)), i);
        }
    }

    #[test]
    fn ascent_counts() {
        assert_eq!(Permutation::identity(3).ascents(), 2);
        assert_eq!(Permutation::longest(3).ascents(), 0);
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().ascents(), 1);
    }

    #[test]
    fn times_longest_reverses() {
        let w = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(w.times_longest().one_line(), &[3, 1, 2]);
    }

    #[test]
    fn conjugation_by_longest() {
        let w = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(w.conjugate_by_longest().one_line(), &[2, 3, 1]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Permutation::new(vec![2, 1, 3]).unwrap().to_string(), "213");
    }
}
