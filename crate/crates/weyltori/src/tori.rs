//! Exact statistics of Frobenius-stable maximal tori.
//!
//! For a connected reductive group over F_q with Weyl group W, the stable
//! maximal tori are classified up to conjugacy by F-conjugacy classes of
//! W, and a character-polynomial statistic P accumulates over all q^{|Φ|}
//! tori (|Φ| = number of roots: 2n² for Sp_2n and SO_{2n+1}, n² − n for
//! GL_n) to the exact value
//!
//! ```text
//!   Σ_T P(T) = q^{|Φ|} · (1/|W|) Σ_{classes C} |C| · P(C) · χ_R(C; 1/q),
//! ```
//!
//! where χ_R(·; t) is the graded character of the coinvariant algebra.
//! Dividing by q^{|Φ|} gives the expectation of P over tori; written as a
//! power series in x = 1/q its coefficients are ⟨P, R^d⟩, which become
//! independent of the rank for n ≥ d + deg P. The limit series is
//! assembled degree by degree with a higher-rank witness confirming each
//! coefficient.

use std::fmt;

use num::{One, Signed, Zero};

use crate::charpoly::CharacterPolynomial;
use crate::coinvariant::molien_graded_character;
use crate::error::{Error, Result};
use crate::partitions::DoublePartition;
use crate::rational::{rat_pow, Integer, Rational};
use crate::series::GradedSeries;
use crate::weyl::{centralizer_order, conjugacy_classes, group_order, GroupKind};

/// Number of roots: 2n² in type B/C, n² − n in type A.
pub fn root_count(n: usize, kind: GroupKind) -> usize {
    match kind {
        GroupKind::Bc => 2 * n * n,
        GroupKind::A => n * n - n,
    }
}

pub(crate) fn validate_q(q: &Integer) -> Result<Rational> {
    if q < &Integer::from(2u32) {
        return Err(Error::Validation(format!(
            "q must be an integer of size at least 2, got {q}"
        )));
    }
    Ok(Rational::from_integer(1.into()) / Rational::from_integer(q.clone()))
}

/// Expectation of P over stable maximal tori of the rank-n group:
/// (1/|W|) Σ_C |C|·P(C)·χ_R(C; 1/q), exactly.
fn expectation_for_kind(
    p: &CharacterPolynomial,
    n: usize,
    q: &Integer,
    kind: GroupKind,
) -> Result<Rational> {
    let x = validate_q(q)?;
    let mut acc = Rational::zero();
    for class in conjugacy_classes(n, kind) {
        let value = p.evaluate(&class.label);
        if value.is_zero() {
            continue;
        }
        let chi = molien_graded_character(&class.label, kind)?;
        acc += Rational::from_integer(class.size) * value * chi.eval(&x);
    }
    Ok(acc / Rational::from_integer(group_order(n, kind)))
}

/// Σ_T P(T) over all q^{2n²} stable maximal tori of Sp_2n / SO_{2n+1}.
pub fn lehrer_total(p: &CharacterPolynomial, n: usize, q: &Integer) -> Result<Rational> {
    let e = expectation_for_kind(p, n, q, GroupKind::Bc)?;
    Ok(e * rat_pow(&Rational::from_integer(q.clone()), root_count(n, GroupKind::Bc) as i64))
}

/// lehrer_total / q^{2n²}: the average of P over stable maximal tori.
pub fn expectation(p: &CharacterPolynomial, n: usize, q: &Integer) -> Result<Rational> {
    expectation_for_kind(p, n, q, GroupKind::Bc)
}

/// The same statistic for GL_n (type A classes, type A invariant degrees),
/// normalized by the q^{n²−n} torus count.
pub fn type_a_statistics(p: &CharacterPolynomial, n: usize, q: &Integer) -> Result<Rational> {
    expectation_for_kind(p, n, q, GroupKind::A)
}

/// The expectation with q left formal: the polynomial Σ_d ⟨P, R_n^d⟩ x^d
/// in x = 1/q (a finite sum, d ≤ top degree). Evaluating it at x = 1/q
/// recovers [`expectation`]; its coefficients are the graded inner
/// products of P with the coinvariant algebra of rank n.
pub fn lehrer_graded_coefficients(
    p: &CharacterPolynomial,
    n: usize,
    kind: GroupKind,
) -> Result<GradedSeries> {
    let mut acc = GradedSeries::zero();
    for class in conjugacy_classes(n, kind) {
        let value = p.evaluate(&class.label) * Rational::from_integer(class.size);
        if value.is_zero() {
            continue;
        }
        let chi = molien_graded_character(&class.label, kind)?;
        acc = &acc + &chi.scale(&value);
    }
    Ok(acc.scale(&(Rational::one() / Rational::from_integer(group_order(n, kind)))))
}

/// One full statistic: the exact total and its normalized expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToriStatistic {
    pub n: usize,
    pub kind: GroupKind,
    pub q: Integer,
    /// Canonical rendering of the character polynomial.
    pub polynomial: String,
    /// Σ_T P(T).
    pub total: Rational,
    /// total / q^{#roots}.
    pub expectation: Rational,
}

/// Computes [`ToriStatistic`] for either kind.
pub fn tori_statistic(
    p: &CharacterPolynomial,
    n: usize,
    q: &Integer,
    kind: GroupKind,
) -> Result<ToriStatistic> {
    let expectation = expectation_for_kind(p, n, q, kind)?;
    let total = &expectation
        * rat_pow(&Rational::from_integer(q.clone()), root_count(n, kind) as i64);
    Ok(ToriStatistic {
        n,
        kind,
        q: q.clone(),
        polynomial: p.render(),
        total,
        expectation,
    })
}

/// Graded mean of a single binomial-basis element against the coinvariant
/// characters of rank n, in closed form (valid for n ≥ |key|):
///
/// ```text
///   ⟨basis_key, χ_R(·;t)⟩_{B_n}
///     = (1/z_key) · ∏_{i=n−d'+1}^{n} (1−t^{2i})
///                 / ( ∏_{r∈x}(1−t^r) · ∏_{r∈y}(1+t^r) ),   d' = |key|.
/// ```
///
/// The identity follows by splitting each group element into the cycles
/// that realize the marked sub-cycle-type and the rest: the rest averages
/// to the invariant-ring Hilbert series of rank n − d' (Molien), and the
/// marked part contributes its own characteristic factors; the numerator
/// is the ratio of the rank-n and rank-(n−d') invariant degree products.
fn basis_graded_mean(key: &DoublePartition, n: usize, dmax: usize) -> Result<GradedSeries> {
    let d_prime = key.total();
    if n < d_prime {
        return Err(Error::Validation(format!(
            "closed-form mean of {key} needs rank at least {d_prime}, got {n}"
        )));
    }
    let mut numerator = GradedSeries::one();
    for i in n - d_prime + 1..=n {
        if 2 * i <= dmax {
            numerator = numerator.mul_trunc(&GradedSeries::one_minus_tk(2 * i), dmax);
        }
    }
    let mut denominator = GradedSeries::one();
    for &r in key.positive.parts() {
        denominator = &denominator * &GradedSeries::one_minus_tk(r);
    }
    for &r in key.negative.parts() {
        denominator = &denominator * &GradedSeries::one_plus_tk(r);
    }
    let z = Rational::from_integer(centralizer_order(key, GroupKind::Bc).expect("B/C key"));
    Ok(numerator
        .mul_trunc(&denominator.inverse_trunc(dmax)?, dmax)
        .scale(&(Rational::one() / z)))
}

/// ⟨P, χ_R(·;t)⟩_{B_n} up to degree dmax via the closed form above,
/// summed over the basis expansion of P. Requires n ≥ deg P.
pub fn graded_mean_closed_form(
    p: &CharacterPolynomial,
    n: usize,
    dmax: usize,
) -> Result<GradedSeries> {
    let mut acc = GradedSeries::zero();
    for (key, c) in p.terms() {
        acc = &acc + &basis_graded_mean(key, n, dmax)?.scale(c);
    }
    Ok(acc)
}

/// One coefficient of a limit series, together with the rank it was read
/// at and the confirming value one rank higher.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitEntry {
    pub d: usize,
    pub value: Rational,
    /// Rank at which the coefficient was computed.
    pub probe_n: usize,
    /// Whether the value at probe_n + 1 agreed.
    pub stabilized: bool,
    pub value_at_next: Rational,
}

/// The n → ∞ limit of the tori expectation of P, as a power series in
/// x = 1/q: coefficient d is the stable inner product ⟨P, R^d⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitSeries {
    polynomial: String,
    entries: Vec<LimitEntry>,
}

impl LimitSeries {
    /// Canonical rendering of the polynomial the series belongs to.
    pub fn polynomial(&self) -> &str {
        &self.polynomial
    }

    pub fn entries(&self) -> &[LimitEntry] {
        &self.entries
    }

    /// The coefficients as a series in x = 1/q; fails with
    /// [`Error::NotStabilized`] if any degree's witness disagreed.
    pub fn coefficients(&self) -> Result<GradedSeries> {
        for e in &self.entries {
            if !e.stabilized {
                return Err(Error::NotStabilized {
                    n: e.probe_n,
                    value_at_n: e.value.to_string(),
                    value_at_next: e.value_at_next.to_string(),
                });
            }
        }
        Ok(GradedSeries::from_coeffs(
            self.entries.iter().map(|e| e.value.clone()).collect(),
        ))
    }

    /// Partial sums Σ_{d ≤ D} c_d q^{−d} for D = 0..=d_max: the truncated
    /// limit expectations at a concrete q.
    pub fn partial_sums(&self, q: &Integer) -> Result<Vec<Rational>> {
        let x = validate_q(q)?;
        let coeffs = self.coefficients()?;
        let mut sums = Vec::with_capacity(self.entries.len());
        let mut acc = Rational::zero();
        let mut power = Rational::one();
        for e in &self.entries {
            acc += coeffs.coefficient(e.d) * &power;
            power *= &x;
            sums.push(acc.clone());
        }
        Ok(sums)
    }

    /// Smallest degree from which the term sizes |c_d|·q^{−d}, taken over
    /// the nonzero coefficients, are weakly decreasing through the end of
    /// the computed range: an observed (not proven) start of tail decay
    /// at this q. `None` if every coefficient vanishes.
    pub fn tail_decay_start(&self, q: &Integer) -> Result<Option<usize>> {
        let x = validate_q(q)?;
        let coeffs = self.coefficients()?;
        let magnitudes: Vec<(usize, Rational)> = self
            .entries
            .iter()
            .filter(|e| !coeffs.coefficient(e.d).is_zero())
            .map(|e| (e.d, coeffs.coefficient(e.d).abs() * rat_pow(&x, e.d as i64)))
            .collect();
        let mut start = None;
        for i in (0..magnitudes.len()).rev() {
            let tail_ok = magnitudes[i..].windows(2).all(|w| w[0].1 >= w[1].1);
            if tail_ok {
                start = Some(magnitudes[i].0);
            } else {
                break;
            }
        }
        Ok(start)
    }
}

/// Computes the limit series of P up to degree d_max.
///
/// Each coefficient is read at rank n_d = d + deg P + 2 and confirmed at
/// rank n_d + 1; the entry records both values and whether they agreed.
pub fn stable_limit_series(p: &CharacterPolynomial, d_max: usize) -> Result<LimitSeries> {
    let deg = p.degree();
    let mut entries = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let probe_n = d + deg + 2;
        let value = graded_mean_closed_form(p, probe_n, d)?.coefficient(d);
        let value_at_next = graded_mean_closed_form(p, probe_n + 1, d)?.coefficient(d);
        entries.push(LimitEntry {
            d,
            stabilized: value == value_at_next,
            value,
            probe_n,
            value_at_next,
        });
    }
    Ok(LimitSeries {
        polynomial: p.render(),
        entries,
    })
}

/// One row of the five-statistic summary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    /// Short name of the statistic.
    pub statistic: &'static str,
    /// Canonical character polynomial.
    pub polynomial: String,
    /// Value computed through the class-sum pipeline at (n, q).
    pub computed: Rational,
    /// Value of the hard-coded closed form at (n, q).
    pub closed_form: Rational,
    /// Value of the hard-coded n → ∞ limit at q.
    pub limit: Rational,
}

/// The five-statistic summary for one (n, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Report {
    pub n: usize,
    pub q: Integer,
    pub rows: Vec<Table1Row>,
}

impl fmt::Display for Table1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "torus statistics at n = {}, q = {}", self.n, self.q)?;
        for row in &self.rows {
            writeln!(
                f,
                "  {}: P = {}, value = {}, limit = {}",
                row.statistic, row.polynomial, row.computed, row.limit
            )?;
        }
        Ok(())
    }
}

/// Evaluates the five torus statistics at (n, q) through the class-sum
/// pipeline and checks each against its closed form in n and q; returns
/// the full table or a detailed mismatch report.
///
/// Statistics and closed forms (x = 1/q):
///
/// | statistic                         | P            | closed form                                   | limit                |
/// |-----------------------------------|--------------|-----------------------------------------------|----------------------|
/// | total count (unnormalized)        | 1            | q^{2n²}                                       | 1 (normalized)       |
/// | 1-dim subtori                     | X1 + Y1      | 1 + x² + … + x^{2n−2}                         | q²/(q²−1)            |
/// | split 1-dim subtori               | X1           | (1 + x + … + x^{2n−1})/2                      | q/(2(q−1))           |
/// | reducible − irreducible 2-dim     | C(X1+Y1,2)−X2−Y2 | q⁴(1−x^{2n})(1−x^{2n−2})/((q²−1)(q⁴−1))  | q⁴/((q²−1)(q⁴−1))    |
/// | split − non-split 2-dim           | X2 − Y2      | q²(1−x^{2n})(1−x^{2n−2})/(2(q⁴−1))            | q²/(2(q⁴−1))         |
///
/// The fourth row's closed form is equivalent to x²·[n choose 2]_{x²}
/// (a Gaussian binomial), matching the tableau counts of the two
/// contributing irreducible families at every finite n.
pub fn closed_form_table1(n: usize, q: &Integer) -> Result<Table1Report> {
    if n < 2 {
        return Err(Error::Validation(format!(
            "the summary table needs n at least 2, got {n}"
        )));
    }
    let x = validate_q(q)?;
    let qr = Rational::from_integer(q.clone());
    let q2 = rat_pow(&qr, 2);
    let q4 = rat_pow(&qr, 4);
    let one = Rational::one();
    let two = Rational::from_integer(2.into());

    let geometric = |step: usize, terms: usize| -> Rational {
        (0..terms).map(|i| rat_pow(&x, (step * i) as i64)).sum()
    };
    let x2n = rat_pow(&x, 2 * n as i64);
    let x2n2 = rat_pow(&x, 2 * (n as i64 - 1));

    let specs: [(&'static str, &str, Rational, Rational); 5] = [
        (
            "total count",
            "1",
            rat_pow(&qr, root_count(n, GroupKind::Bc) as i64),
            one.clone(),
        ),
        (
            "1-dim subtori",
            "X1 + Y1",
            geometric(2, n),
            &q2 / (&q2 - &one),
        ),
        (
            "split 1-dim subtori",
            "X1",
            geometric(1, 2 * n) / &two,
            &qr / (&two * (&qr - &one)),
        ),
        (
            "reducible minus irreducible 2-dim",
            "C(X1+Y1,2) - X2 - Y2",
            &q4 * (&one - &x2n) * (&one - &x2n2) / ((&q2 - &one) * (&q4 - &one)),
            &q4 / ((&q2 - &one) * (&q4 - &one)),
        ),
        (
            "split minus non-split 2-dim",
            "X2 - Y2",
            &q2 * (&one - &x2n) * (&one - &x2n2) / (&two * (&q4 - &one)),
            &q2 / (&two * (&q4 - &one)),
        ),
    ];

    let mut rows = Vec::with_capacity(5);
    for (statistic, poly_src, closed_form, limit) in specs {
        let p = CharacterPolynomial::parse(poly_src).expect("valid builtin polynomial");
        let computed = if statistic == "total count" {
            lehrer_total(&p, n, q)?
        } else {
            expectation(&p, n, q)?
        };
        if computed != closed_form {
            return Err(Error::InternalConsistency(format!(
                "statistic {statistic:?} (P = {}) at n={n}, q={q}: pipeline gives {computed}, closed form gives {closed_form}",
                p.render()
            )));
        }
        rows.push(Table1Row {
            statistic,
            polynomial: p.render(),
            computed,
            closed_form,
            limit,
        });
    }
    Ok(Table1Report {
        n,
        q: q.clone(),
        rows,
    })
}
