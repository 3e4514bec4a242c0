//! Exact scalars.
//!
//! Two scalar types are used throughout the crate:
//!
//! * [`Rational`], an arbitrary-precision rational number (always stored
//!   reduced, with positive denominator);
//! * [`ExtScalar`], a finite rational combination of *declared real
//!   symbols*: `c0·1 + c1·σ1 + c2·σ2 + …` with rational coefficients.
//!
//! Symbol index `0` is reserved for the unit symbol `1`, so a plain rational
//! embeds as an [`ExtScalar`] supported on index `0`. The symbols stand for
//! real numbers that the data author declares to be linearly independent
//! over the rationals. **That independence is a contract carried by the
//! input data, not something this library can verify** — deciding rational
//! independence of arbitrary real numbers is not computable. Every rank or
//! kernel computed from [`ExtScalar`] entries is correct exactly when the
//! declared independence holds.
//!
//! Arbitrary precision is not optional here: Smith normal form and
//! Fourier–Motzkin elimination can blow up intermediate entries far past any
//! fixed-width integer, and silent wraparound would be a correctness bug.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Index of the reserved unit symbol `1`.
pub const UNIT_SYMBOL: usize = 0;

/// `n` as a big integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// A finite rational combination of declared real symbols.
///
/// Invariants: zero coefficients are never stored, so `terms` is empty iff
/// the scalar is zero, and iteration order (by symbol index) is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtScalar {
    terms: BTreeMap<usize, Rational>,
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar {
            terms: BTreeMap::new(),
        }
    }

    /// A plain rational, i.e. `r·1`.
    pub fn from_rational(r: Rational) -> Self {
        Self::term(r, UNIT_SYMBOL)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// The symbol `σ_index` with coefficient one.
    pub fn symbol(index: usize) -> Self {
        Self::term(Rational::one(), index)
    }

    /// A single term `coeff·σ_index`.
    pub fn term(coeff: Rational, index: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(index, coeff);
        }
        ExtScalar { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, usize)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (coeff, index) in iter {
            out.add_term(&coeff, index);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of symbol `index` (zero when absent).
    pub fn coeff(&self, index: usize) -> Rational {
        self.terms
            .get(&index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing symbol order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    /// Largest symbol index present.
    pub fn max_symbol(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// True when the scalar is a plain rational (supported on the unit symbol).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&i| i == UNIT_SYMBOL)
    }

    /// The rational value, if the scalar is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeff(UNIT_SYMBOL))
        } else {
            None
        }
    }

    fn add_term(&mut self, coeff: &Rational, index: usize) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(index).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        ExtScalar {
            terms: self.terms.iter().map(|(i, c)| (*i, c * by)).collect(),
        }
    }

    /// Coefficients as a dense vector of length `symbol_count`.
    ///
    /// Returns `None` if some term references a symbol `>= symbol_count`.
    pub fn dense_coeffs(&self, symbol_count: usize) -> Option<Vec<Rational>> {
        let mut out = alloc::vec![Rational::zero(); symbol_count];
        for (i, c) in self.terms() {
            if i >= symbol_count {
                return None;
            }
            out[i] = c.clone();
        }
        Some(out)
    }
}

impl Add for &ExtScalar {
    type Output = ExtScalar;
    fn add(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        for (i, c) in rhs.terms() {
            out.add_term(c, i);
        }
        out
    }
}

impl Sub for &ExtScalar {
    type Output = ExtScalar;
    fn sub(self, rhs: &ExtScalar) -> ExtScalar {
        let mut out = self.clone();
        for (i, c) in rhs.terms() {
            out.add_term(&-c.clone(), i);
        }
        out
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        ExtScalar {
            terms: self.terms.iter().map(|(i, c)| (*i, -c.clone())).collect(),
        }
    }
}

impl Mul<&Rational> for &ExtScalar {
    type Output = ExtScalar;
    fn mul(self, rhs: &Rational) -> ExtScalar {
        self.scale(rhs)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            if first {
                first = false;
                if i == UNIT_SYMBOL {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c}*s{i}")?;
                }
            } else {
                let (sign, mag) = if c.is_negative() {
                    ("-", -c.clone())
                } else {
                    ("+", c.clone())
                };
                if i == UNIT_SYMBOL {
                    write!(f, " {sign} {mag}")?;
                } else {
                    write!(f, " {sign} {mag}*s{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Canonical `p/q` rendering of a rational (reduced, positive denominator).
pub fn rational_to_string(r: &Rational) -> String {
    use alloc::format;
    format!("{}/{}", r.numer(), r.denom())
}
