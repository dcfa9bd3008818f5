//! Exact special values of the standard trace on the extended affine Hecke
//! algebra of type A.
//!
//! For a weight `lambda` in the root lattice of `A_{n-1}`, the crate
//! computes the trace of the translation element attached to `-lambda` as
//! an exact Laurent polynomial in `q`, along four independent pipelines:
//!
//! - [`kostant`]: the weighted sum over Kostant partitions of `lambda`
//!   (the ground-truth evaluation, memoized);
//! - [`residue`]: a signed sum of `q`-powers over a set of `2^(n-1)`
//!   permutations, times `(q-1)^n / (q^n - 1)`;
//! - [`product`]: a closed product of `q`-integers, valid on weights
//!   interior to a valley chamber;
//! - [`series`]: coefficient extraction from the truncated power-series
//!   expansion of the trace generating function.
//!
//! All four agree bit-exactly on their common domain, and the [`tesler`]
//! module carries the fifth leg: the bijection between Kostant partitions
//! and Tesler matrices with prescribed hook sums, transporting the weighted
//! sum. Everything is exact integer arithmetic; there is no floating point
//! anywhere in the crate.
//!
//! ```
//! use hecke_trace::kostant::trace_kostant;
//! use hecke_trace::product::trace_product;
//! use hecke_trace::roots::{build_type_a, WeightVector};
//!
//! let sys = build_type_a(3)?;
//! let lambda = WeightVector::new(vec![2, 1]);
//! let tau = trace_kostant(&sys, &lambda);
//! assert_eq!(tau, trace_product(3, &lambda)?);
//! assert_eq!(tau.to_string(), "q^3 - 3*q^2 + 3*q - 2 + 3*q^-1 - 3*q^-2 + q^-3");
//! # Ok::<(), hecke_trace::Error>(())
//! ```

pub mod chambers;
pub mod cli;
pub mod kostant;
pub mod laurent;
pub mod perm;
pub mod product;
pub mod residue;
pub mod roots;
pub mod series;
pub mod tesler;

mod error;

pub use error::Error;
pub use laurent::LaurentPoly;
pub use perm::Permutation;
pub use roots::{RootSystemA, RootVector, WeightVector};
