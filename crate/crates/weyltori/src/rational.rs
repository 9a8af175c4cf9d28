//! Exact rational scalars and small integer helpers.
//!
//! All arithmetic in this crate is exact: unbounded integers and reduced
//! big-integer ratios. This module re-exports the scalar types and provides
//! the handful of combinatorial helpers (factorials, binomials) everything
//! else is built from.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Exact rational number: reduced ratio of unbounded integers,
/// denominator always positive.
pub type Rational = BigRational;

/// Unbounded signed integer.
pub type Integer = BigInt;

/// `n` as an [`Integer`].
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

/// `n` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(int(n))
}

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(int(p), int(q))
}

/// `n!` as an unbounded integer.
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for k in 2..=n {
        acc *= int(k as i64);
    }
    acc
}

/// Binomial coefficient `C(n, k)` for nonnegative integer arguments;
/// zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

/// Falling-factorial binomial `C(m, k)` for an arbitrary integer `m`
/// (polynomial extension): `m(m−1)…(m−k+1)/k!`.
pub fn binomial_int(m: &Integer, k: usize) -> Integer {
    let mut num = Integer::one();
    for i in 0..k {
        num *= m - int(i as i64);
    }
    num / factorial(k)
}

/// Exact integer power `base^exp`.
pub fn int_pow(base: &Integer, exp: u32) -> Integer {
    num::pow::pow(base.clone(), exp as usize)
}

/// Exact rational power `base^exp` for signed exponents.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num::pow::pow(base.clone(), exp as usize)
    } else {
        num::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// Renders a rational with `/` only when the denominator is not 1,
/// e.g. `-3/4`, `5`. Stable across versions; used by all output formats.
pub fn render_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the format produced by [`render_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Integer = p.trim().parse().ok()?;
            let q: Integer = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => {
            let p: Integer = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}

/// True if `x` is a nonnegative integer.
pub fn is_nonneg_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_negative()
}
