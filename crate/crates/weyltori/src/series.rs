//! Dense polynomials / truncated power series in one variable `t` with
//! exact rational coefficients.
//!
//! Graded characters, graded multiplicity tables, Molien series and limit
//! series are all carried by this one type. Coefficients are stored from
//! degree 0 upward with trailing zeros trimmed, so equality is structural.

use std::ops::{Add, Mul, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::rational::{render_rational, Rational};

/// Polynomial (or truncation of a series) Σ c_d t^d, dense in `d`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSeries {
    coeffs: Vec<Rational>,
}

impl GradedSeries {
    /// Builds from coefficients `c_0, c_1, …`; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut s = Self { coeffs };
        s.trim();
        s
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · t^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 − t^k` (the building block of Molien numerators).
    pub fn one_minus_tk(k: usize) -> Self {
        Self::one() - Self::monomial(Rational::from_integer(1.into()), k)
    }

    /// `1 + t^k`.
    pub fn one_plus_tk(k: usize) -> Self {
        Self::one() + Self::monomial(Rational::from_integer(1.into()), k)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest nonzero term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of t^d (zero beyond the stored range).
    pub fn coefficient(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients from degree 0 to the degree, dense.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Drops all terms of degree > dmax.
    pub fn truncate(&self, dmax: usize) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .take(dmax + 1)
                .cloned()
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Full product, then truncation to degree dmax (avoids computing
    /// coefficients past the cutoff).
    pub fn mul_trunc(&self, other: &Self, dmax: usize) -> Self {
        let mut coeffs =
            vec![Rational::zero(); (dmax + 1).min(self.coeffs.len() + other.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > dmax || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > dmax {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact polynomial quotient `self / divisor`.
    ///
    /// Fails with [`Error::InternalConsistency`] if the division leaves a
    /// remainder; callers use this to assert that a quantity known on
    /// theoretical grounds to be polynomial really is.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InternalConsistency(
                "polynomial division by zero".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dn = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs[dn].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn + 1 {
            return Err(Error::InternalConsistency(format!(
                "polynomial division leaves remainder: degree {} < divisor degree {dn}",
                rem.len() - 1
            )));
        }
        let qd = rem.len() - 1 - dn;
        let mut quot = vec![Rational::zero(); qd + 1];
        for k in (0..=qd).rev() {
            let c = &rem[k + dn] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let v = &c * d;
                    rem[k + i] -= v;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalConsistency(
                "polynomial division leaves remainder".into(),
            ));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Multiplicative inverse as a power series, truncated at degree dmax.
    /// Requires a nonzero constant term.
    pub fn inverse_trunc(&self, dmax: usize) -> Result<Self> {
        let a0 = self.coefficient(0);
        if a0.is_zero() {
            return Err(Error::InternalConsistency(
                "series inverse requires nonzero constant term".into(),
            ));
        }
        let mut inv = vec![Rational::zero(); dmax + 1];
        inv[0] = Rational::from_integer(1.into()) / &a0;
        for k in 1..=dmax {
            let mut acc = Rational::zero();
            for i in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv[k] = -acc / &a0;
        }
        Ok(Self::from_coeffs(inv))
    }

    /// Evaluates at the rational point `t = x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of coefficients (the evaluation at t = 1).
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// Human-readable rendering like `1 - 2*t^2 + 1/2*t^3`, lowest degree
    /// first; the zero polynomial prints as `0`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let mag = render_rational(&if negative { -c.clone() } else { c.clone() });
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit_coeff = mag == "1" && d > 0;
            if !unit_coeff {
                out.push_str(&mag);
            }
            match d {
                0 => {}
                1 => {
                    if !unit_coeff {
                        out.push('*');
                    }
                    out.push_str(var);
                }
                _ => {
                    if !unit_coeff {
                        out.push('*');
                    }
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
        out
    }
}

impl Add for GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: GradedSeries) -> GradedSeries {
        &self + &rhs
    }
}

impl Add for &GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        GradedSeries::from_coeffs(coeffs)
    }
}

impl Sub for GradedSeries {
    type Output = GradedSeries;
    fn sub(self, rhs: GradedSeries) -> GradedSeries {
        &self - &rhs
    }
}

impl Sub for &GradedSeries {
    type Output = GradedSeries;
    fn sub(self, rhs: &GradedSeries) -> GradedSeries {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        GradedSeries::from_coeffs(coeffs)
    }
}

impl Mul for GradedSeries {
    type Output = GradedSeries;
    fn mul(self, rhs: GradedSeries) -> GradedSeries {
        &self * &rhs
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;
    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        if self.is_zero() || rhs.is_zero() {
            return GradedSeries::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        GradedSeries::from_coeffs(coeffs)
    }
}
