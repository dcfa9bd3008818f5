//! Exact Laurent polynomials in a single variable `q` over arbitrary-precision
//! integers.
//!
//! Every trace value produced by this crate lives in `Z[q, q^-1]`, and the
//! factors `(q-1)^(2(n-1))` that show up in those values overflow 64-bit
//! coefficients already at modest rank, so coefficients are [`BigInt`]s and
//! all arithmetic is exact. A polynomial is kept in canonical form at all
//! times: no stored coefficient is zero, and the zero polynomial is the
//! empty term map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A Laurent polynomial `sum c_e q^e` with `c_e` arbitrary-precision integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    /// exponent -> coefficient; invariant: no value is zero.
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// `c * q^e`; collapses to zero when `c == 0`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(0, c)
    }

    /// Builds a polynomial from arbitrary `(exp, coeff)` pairs, summing
    /// duplicates and dropping zero results.
    pub fn from_terms<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Substitutes `q -> q^-1` (an involutive ring homomorphism).
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies every exponent's monomial by `q^shift`.
    pub fn shifted(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// `self^e` by repeated multiplication (exponents here are tiny).
    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Succeeds iff `den` divides `self`; the quotient times `den`
    /// reproduces `self` exactly. A nonzero remainder (including a
    /// coefficient that is not integrally divisible at some step of the
    /// long division) yields [`Error::NonDivisible`].
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both operands so they become ordinary polynomials with a
        // nonzero constant term; units q^k are invisible to divisibility.
        let a_min = self.min_exp().unwrap();
        let b_min = den.min_exp().unwrap();
        let mut rem = self.shifted(-a_min);
        let divisor = den.shifted(-b_min);
        let div_top = divisor.max_exp().unwrap();
        let div_lead = divisor.coeff(div_top);

        let mut quot = LaurentPoly::zero();
        while let Some(rem_top) = rem.max_exp() {
            if rem_top < div_top {
                return Err(Error::NonDivisible);
            }
            let lead = rem.coeff(rem_top);
            if !(&lead % &div_lead).is_zero() {
                return Err(Error::NonDivisible);
            }
            let term = LaurentPoly::monomial(rem_top - div_top, &lead / &div_lead);
            rem = &rem - &(&term * &divisor);
            quot = &quot + &term;
        }
        Ok(quot.shifted(a_min - b_min))
    }
}

/// The q-integer `[k]_q = 1 + q + ... + q^(k-1)`; `[0]_q = 0`.
pub fn q_integer(k: i64) -> Result<LaurentPoly, Error> {
    q_integer_base(k, 1)
}

/// `[k]` in base `q^s`: `1 + q^s + ... + q^(s(k-1))`.
pub fn q_integer_base(k: i64, s: u32) -> Result<LaurentPoly, Error> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let s = i64::from(s);
    Ok(LaurentPoly::from_terms((0..k).map(|i| (s * i, 1))))
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

/// Canonical rendering: terms by decreasing exponent, explicit signs,
/// exponent 0 as a bare coefficient, e.g. `q^2 - 4*q + 6 - 4*q^-1 + q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let qpow = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{qpow}")?;
            } else {
                write!(f, "{mag}*{qpow}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: i64,
    coeff: String,
}

/// Wire form: `{"terms":[{"exp":E,"coeff":"C"},...]}` sorted by decreasing
/// exponent, coefficients as decimal strings so nothing is lost in transit.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| TermJson {
                exp: *e,
                coeff: c.to_string(),
            })
            .collect();
        let mut st = serializer.serialize_struct("LaurentPoly", 1)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            terms: Vec<TermJson>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for t in wire.terms {
            let c = BigInt::from_str(&t.coeff)
                .map_err(|e| D::Error::custom(format!("bad coefficient {:?}: {e}", t.coeff)))?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}
