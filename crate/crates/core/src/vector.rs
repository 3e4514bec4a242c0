//! Small helpers for dense vectors of exact scalars.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{ExtScalar, Int, Rational};

pub fn int_to_rat(v: &[Int]) -> Vec<Rational> {
    v.iter()
        .map(|n| Rational::from_integer(n.clone()))
        .collect()
}

pub fn rat_from_i64(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| crate::scalar::rat(n)).collect()
}

pub fn int_from_i64(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&n| Int::from(n)).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot of a rational covector against an integer vector.
pub fn dot_rat_int(a: &[Rational], b: &[Int]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| x * Rational::from_integer(y.clone()))
        .sum()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| -x).collect()
}

pub fn scale(a: &[Rational], by: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * by).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn is_zero_int(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn zeros(n: usize) -> Vec<Rational> {
    alloc::vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

/// Clears denominators and divides by the content, preserving orientation:
/// the result is the unique primitive integer vector that is a positive
/// multiple of `v`. Returns the zero vector for zero input.
pub fn primitive_direction(v: &[Rational]) -> Vec<Int> {
    if is_zero(v) {
        return alloc::vec![Int::zero(); v.len()];
    }
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = Int::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    ints.iter().map(|x| x / &gcd).collect()
}

/// Same as [`primitive_direction`] but keeps the rational scale factor:
/// returns `(d, lambda)` with `v = lambda · d`, `lambda > 0`.
pub fn primitive_direction_with_scale(v: &[Rational]) -> (Vec<Int>, Rational) {
    let d = primitive_direction(v);
    for (x, y) in v.iter().zip(&d) {
        if !y.is_zero() {
            let lambda = x / Rational::from_integer(y.clone());
            debug_assert!(lambda.is_positive());
            return (d, lambda);
        }
    }
    (d, Rational::one())
}

/// Contract a row of extended scalars against a rational vector.
pub fn dot_ext_rat(a: &[ExtScalar], b: &[Rational]) -> ExtScalar {
    debug_assert_eq!(a.len(), b.len());
    let mut out = ExtScalar::zero();
    for (x, y) in a.iter().zip(b) {
        out = &out + &x.scale(y);
    }
    out
}

/// Contract a row of extended scalars against an integer vector.
pub fn dot_ext_int(a: &[ExtScalar], b: &[Int]) -> ExtScalar {
    debug_assert_eq!(a.len(), b.len());
    let mut out = ExtScalar::zero();
    for (x, y) in a.iter().zip(b) {
        out = &out + &x.scale(&Rational::from_integer(y.clone()));
    }
    out
}
