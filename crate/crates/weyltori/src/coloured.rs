//! Coloured-partition counts and orbit growth of monomial modules.
//!
//! A coloured partition of N with C colours is a multiset of nonempty
//! blocks, each block a multiset of balls coloured from {1..C}; their
//! number T(N, C) has generating function ∏_{k≥1} (1−x^k)^{−B_k} with
//! B_k = C(k+C−1, C−1) block types of size k. T(N, C) grows
//! subexponentially in N, which is what keeps the number of W_{n−a}-orbits
//! of degree-d monomials on b invariant generators plus c copies of the
//! tautological permutation module bounded independently of n and
//! subexponentially in d. This module computes the counts exactly (with a
//! brute enumeration oracle at small sizes), probes the growth rate,
//! computes the same orbit counts a second way as invariant dimensions via
//! Molien averaging, and runs the contrasting demonstration: for the edge
//! algebra on pair variables x_{ij} (a genuinely quadratic module), the
//! stable coefficients c_d count loopless multigraphs with d edges and
//! grow so fast that Σ c_d q^{−d} diverges for every integer q.

use std::collections::BTreeMap;

use num::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions, DoublePartition};
use crate::rational::{binomial, binomial_int, rat_pow, Integer, Rational};
use crate::series::GradedSeries;
use crate::tori::validate_q;
use crate::weyl::{centralizer_order, conjugacy_classes, GroupKind};

/// Number of block types of size k with `colours` colours:
/// C(k + colours − 1, colours − 1).
fn block_types(k: usize, colours: usize) -> Integer {
    if colours == 0 {
        return if k == 0 { Integer::one() } else { Integer::zero() };
    }
    binomial(k + colours - 1, colours - 1)
}

/// T(N, C): the number of coloured partitions of N with C colours, by
/// generating-function dynamic programming (no enumeration).
pub fn count_coloured_partitions(n_total: usize, colours: usize) -> Integer {
    let mut coeffs = vec![Integer::zero(); n_total + 1];
    coeffs[0] = Integer::one();
    for k in 1..=n_total {
        let types = block_types(k, colours);
        if types.is_zero() {
            continue;
        }
        // Multiply by (1 − x^k)^{−types}: the weight-j slice contributes
        // C(types − 1 + j, j) block multisets of total size jk.
        let mut next = vec![Integer::zero(); n_total + 1];
        for (n, value) in coeffs.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let mut j = 0usize;
            while n + j * k <= n_total {
                next[n + j * k] += value * binomial_int(&(&types - 1 + j), j);
                j += 1;
            }
        }
        coeffs = next;
    }
    coeffs.pop().expect("coefficient vector is nonempty")
}

/// One coloured partition in canonical form: blocks sorted descending,
/// each block's colour indices sorted ascending, colours in 1..=C.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColouredPartition {
    blocks: Vec<Vec<usize>>,
}

impl ColouredPartition {
    /// The blocks, each a weakly increasing list of colour indices.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Total number of balls.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Cap on the size of explicit coloured-partition enumerations; the
/// enumeration exists as an oracle for the generating-function count, so
/// it stays deliberately small.
pub const MAX_COLOURED_ENUMERATION: u64 = 100_000;

/// All coloured partitions of N with C colours, canonically ordered.
/// Fails with a budget error when T(N, C) exceeds
/// [`MAX_COLOURED_ENUMERATION`].
pub fn enumerate_coloured_partitions(
    n_total: usize,
    colours: usize,
) -> Result<Vec<ColouredPartition>> {
    let total = count_coloured_partitions(n_total, colours);
    if total > Integer::from(MAX_COLOURED_ENUMERATION) {
        return Err(Error::BudgetExceeded {
            required: format!("enumeration of {total} coloured partitions"),
            cap: MAX_COLOURED_ENUMERATION,
        });
    }
    // Block types of size 1..=N in descending canonical order.
    let mut types: Vec<Vec<usize>> = Vec::new();
    for k in (1..=n_total).rev() {
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == k {
                types.push(prefix);
                continue;
            }
            let lo = prefix.last().copied().unwrap_or(1);
            // Push in reverse so smaller colours surface first.
            for colour in (lo..=colours).rev() {
                let mut next = prefix.clone();
                next.push(colour);
                stack.push(next);
            }
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn recurse(
        remaining: usize,
        from: usize,
        types: &[Vec<usize>],
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<ColouredPartition>,
    ) {
        if remaining == 0 {
            out.push(ColouredPartition {
                blocks: current.clone(),
            });
            return;
        }
        for (i, block) in types.iter().enumerate().skip(from) {
            if block.len() > remaining {
                continue;
            }
            current.push(block.clone());
            recurse(remaining - block.len(), i, types, current, out);
            current.pop();
        }
    }
    recurse(n_total, 0, &types, &mut current, &mut out);
    Ok(out)
}

/// log₂ of a positive integer as an f64 (exact to f64 precision even for
/// numbers beyond the f64 range, via the top mantissa bits).
fn log2_of(value: &Integer) -> f64 {
    let bits = value.bits();
    if bits <= 53 {
        value.to_f64().expect("small integer fits in f64").log2()
    } else {
        let shift = bits - 53;
        let top = (value >> shift).to_f64().expect("53-bit mantissa");
        top.log2() + shift as f64
    }
}

const LOG_DENOMINATOR_BITS: u32 = 32;

/// Growth-rate probe of T(N, C): dyadic approximations of log₂T(N,C)/N
/// together with a monotonicity summary of the tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubexponentialProbe {
    pub colours: usize,
    /// Entry N holds a denominator-2³² approximation of log₂T(N,C)/N;
    /// entry 0 is 0 by convention.
    pub ratios: Vec<Rational>,
    /// Smallest N₀ ≥ 1 from which the exact ratios strictly decrease
    /// through the end of the probed range (decided by comparing
    /// T(N)^{N+1} against T(N+1)^N in exact integers, not through the
    /// dyadic approximations). `None` if even the last step increases.
    pub decreasing_from: Option<usize>,
}

/// Probes log₂T(N, C)/N for N = 0..=n_max. The ratios would converge to 0
/// if the growth is subexponential; the probe reports the observed trend
/// and leaves certification to the explicit orbit bounds.
pub fn subexponential_probe(colours: usize, n_max: usize) -> SubexponentialProbe {
    let counts: Vec<Integer> = (0..=n_max)
        .map(|n| count_coloured_partitions(n, colours))
        .collect();
    let scale = Integer::one() << LOG_DENOMINATOR_BITS;
    let ratios: Vec<Rational> = counts
        .iter()
        .enumerate()
        .map(|(n, t)| {
            if n == 0 {
                return Rational::zero();
            }
            let scaled = (log2_of(t) * (1u64 << LOG_DENOMINATOR_BITS) as f64).round();
            Rational::new(
                Integer::from(scaled as i64),
                &scale * Integer::from(n as u64),
            )
        })
        .collect();
    let mut decreasing_from = None;
    for n in (1..n_max).rev() {
        // log₂T(N)/N > log₂T(N+1)/(N+1)  ⟺  T(N)^{N+1} > T(N+1)^N.
        let lhs = num::pow::pow(counts[n].clone(), n + 1);
        let rhs = num::pow::pow(counts[n + 1].clone(), n);
        if lhs > rhs {
            decreasing_from = Some(n);
        } else {
            break;
        }
    }
    SubexponentialProbe {
        colours,
        ratios,
        decreasing_from,
    }
}

/// Orbit count of degree-d monomials, with the parameters and the explicit
/// subexponential bound it must stay below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCountReport {
    /// Letters frozen out of the acting group: W_{n−a} acts.
    pub a: usize,
    /// Invariant (trivial-module) generators.
    pub b: usize,
    /// Copies of the tautological permutation module.
    pub c: usize,
    /// Monomial degree.
    pub d: usize,
    /// Ambient level; the algebra has b + 2cn (B/C) or b + cn (A)
    /// generators.
    pub n: usize,
    pub kind: GroupKind,
    pub orbit_count: Integer,
    /// C(F+d, F) · max_{k ≤ d} T(k, 2c) for B/C (T(k, c) in type A) with
    /// F = b + 2ac (resp. b + ac): independent of n and subexponential in
    /// d. For c ≥ 1 the maximum sits at k = d; taking the maximum keeps
    /// the bound valid when c = 0 and the colourless count collapses.
    pub bound: Integer,
}

const MAX_ORBIT_DEGREE: u64 = 64;

/// Number of W_{n−a}-orbit types of weight-w exponent columns over one
/// moving letter, for c module copies.
fn column_types(w: usize, c: usize, kind: GroupKind) -> Integer {
    match kind {
        GroupKind::A => block_types(w, c),
        GroupKind::Bc => {
            // Columns are 2c-vectors up to the sign swap pairing the two
            // halves; Burnside over the 2-element group.
            let plain = block_types(w, 2 * c);
            let swapped = if w % 2 == 0 {
                block_types(w / 2, c)
            } else {
                Integer::zero()
            };
            (plain + swapped) / 2
        }
    }
}

/// Multisets of nonzero exponent columns: entry [w][k] counts multisets of
/// exactly k columns with total weight w, columns drawn from
/// `column_types`.
fn column_multisets(d: usize, c: usize, kind: GroupKind) -> Vec<Vec<Integer>> {
    let mut table = vec![vec![Integer::zero(); d + 1]; d + 1];
    table[0][0] = Integer::one();
    for w0 in 1..=d {
        let types = column_types(w0, c, kind);
        let mut next = vec![vec![Integer::zero(); d + 1]; d + 1];
        for w in 0..=d {
            for k in 0..=d {
                if table[w][k].is_zero() {
                    continue;
                }
                let mut m = 0usize;
                while w + m * w0 <= d && k + m <= d {
                    let ways = binomial_int(&(&types - 1 + m), m);
                    if !ways.is_zero() {
                        next[w + m * w0][k + m] += &table[w][k] * ways;
                    }
                    m += 1;
                }
            }
        }
        table = next;
    }
    table
}

/// Variables fixed by W_{n−a}: the invariant generators plus the frozen
/// coordinates of each module copy.
fn fixed_variable_count(a: usize, b: usize, c: usize, kind: GroupKind) -> usize {
    match kind {
        GroupKind::A => b + a * c,
        GroupKind::Bc => b + 2 * a * c,
    }
}

/// Counts W_{n−a}-orbits of degree-d monomials on b invariant generators
/// plus c copies of the level-n tautological module, by canonical-form
/// counting: an orbit is a degree split between the fixed variables and a
/// multiset of nonzero exponent columns over at most n−a moving letters.
/// The count is independent of n once n ≥ a + d.
pub fn monomial_orbit_count(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    n: usize,
    kind: GroupKind,
) -> Result<OrbitCountReport> {
    if n < a {
        return Err(Error::Validation(format!(
            "need n ≥ a to freeze {a} letters at level {n}"
        )));
    }
    if d as u64 > MAX_ORBIT_DEGREE {
        return Err(Error::BudgetExceeded {
            required: format!("orbit count in degree {d}"),
            cap: MAX_ORBIT_DEGREE,
        });
    }
    let fixed = fixed_variable_count(a, b, c, kind);
    let multisets = column_multisets(d, c, kind);
    let max_columns = d.min(n - a);
    let mut orbit_count = Integer::zero();
    for w in 0..=d {
        let d0 = d - w;
        let fixed_monomials = if fixed == 0 {
            if d0 == 0 {
                Integer::one()
            } else {
                Integer::zero()
            }
        } else {
            binomial(d0 + fixed - 1, fixed - 1)
        };
        if fixed_monomials.is_zero() {
            continue;
        }
        let columns: Integer = multisets[w][..=max_columns].iter().sum();
        orbit_count += fixed_monomials * columns;
    }
    let colours = match kind {
        GroupKind::A => c,
        GroupKind::Bc => 2 * c,
    };
    let max_t = (0..=d)
        .map(|k| count_coloured_partitions(k, colours))
        .max()
        .expect("degree range is nonempty");
    let bound = binomial(fixed + d, fixed) * max_t;
    if orbit_count > bound {
        return Err(Error::InternalConsistency(format!(
            "orbit count {orbit_count} exceeds its bound {bound} at a={a} b={b} c={c} d={d} n={n} kind={kind}"
        )));
    }
    Ok(OrbitCountReport {
        a,
        b,
        c,
        d,
        n,
        kind,
        orbit_count,
        bound,
    })
}

/// The squarefree (exterior) variant: orbits of degree-d monomials in
/// which no generator appears twice, for generators of odd grading.
pub fn monomial_orbit_count_squarefree(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    n: usize,
    kind: GroupKind,
) -> Result<Integer> {
    if n < a {
        return Err(Error::Validation(format!(
            "need n ≥ a to freeze {a} letters at level {n}"
        )));
    }
    if d as u64 > MAX_ORBIT_DEGREE {
        return Err(Error::BudgetExceeded {
            required: format!("orbit count in degree {d}"),
            cap: MAX_ORBIT_DEGREE,
        });
    }
    let fixed = fixed_variable_count(a, b, c, kind);
    // Column types with 0/1 exponents only.
    let squarefree_types = |w: usize| -> Integer {
        match kind {
            GroupKind::A => binomial(c, w),
            GroupKind::Bc => {
                let plain = binomial(2 * c, w);
                let swapped = if w % 2 == 0 {
                    binomial(c, w / 2)
                } else {
                    Integer::zero()
                };
                (plain + swapped) / 2
            }
        }
    };
    let mut table = vec![vec![Integer::zero(); d + 1]; d + 1];
    table[0][0] = Integer::one();
    for w0 in 1..=d {
        let types = squarefree_types(w0);
        if types.is_zero() {
            continue;
        }
        let mut next = vec![vec![Integer::zero(); d + 1]; d + 1];
        for w in 0..=d {
            for k in 0..=d {
                if table[w][k].is_zero() {
                    continue;
                }
                let mut m = 0usize;
                while w + m * w0 <= d && k + m <= d {
                    let ways = binomial_int(&(&types - 1 + m), m);
                    if !ways.is_zero() {
                        next[w + m * w0][k + m] += &table[w][k] * ways;
                    }
                    m += 1;
                }
            }
        }
        table = next;
    }
    let max_columns = d.min(n - a);
    let mut orbit_count = Integer::zero();
    for w in 0..=d {
        let d0 = d - w;
        let fixed_monomials = binomial(fixed, d0);
        if fixed_monomials.is_zero() {
            continue;
        }
        let columns: Integer = table[w][..=max_columns].iter().sum();
        orbit_count += fixed_monomials * columns;
    }
    Ok(orbit_count)
}

const MAX_INVARIANT_RANK: u64 = 30;

/// Dimension of the W_{n−a}-invariants in the degree-d part of the free
/// commutative algebra on b invariant generators plus c copies of the
/// level-n tautological module, by Molien averaging over the conjugacy
/// classes of W_{n−a}. Independent route to [`monomial_orbit_count`].
pub fn invariant_dimension(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    n: usize,
    kind: GroupKind,
) -> Result<Integer> {
    if n < a {
        return Err(Error::Validation(format!(
            "need n ≥ a to freeze {a} letters at level {n}"
        )));
    }
    let rank = n - a;
    if rank as u64 > MAX_INVARIANT_RANK {
        return Err(Error::BudgetExceeded {
            required: format!("class data for rank {rank}"),
            cap: MAX_INVARIANT_RANK,
        });
    }
    let fixed = fixed_variable_count(a, b, c, kind);
    let mut acc = GradedSeries::zero();
    let mut order = Integer::zero();
    for class in conjugacy_classes(rank, kind) {
        let mut denominator = GradedSeries::one();
        let mut push = |k: usize, times: usize| {
            if k <= d {
                for _ in 0..times {
                    denominator = denominator.mul_trunc(&GradedSeries::one_minus_tk(k), d);
                }
            }
        };
        push(1, fixed);
        match kind {
            GroupKind::A => {
                for &r in class.label.positive.parts() {
                    push(r, c);
                }
            }
            GroupKind::Bc => {
                for &r in class.label.positive.parts() {
                    push(r, 2 * c);
                }
                for &r in class.label.negative.parts() {
                    push(2 * r, c);
                }
            }
        }
        let size = Rational::from_integer(class.size.clone());
        acc = &acc + &denominator.inverse_trunc(d)?.scale(&size);
        order += class.size;
    }
    let value = acc.coefficient(d) / Rational::from_integer(order);
    if !value.is_integer() {
        return Err(Error::InternalConsistency(format!(
            "Molien average {value} is not an integer at a={a} b={b} c={c} d={d} n={n} kind={kind}"
        )));
    }
    Ok(value.to_integer())
}

/// One degree of the divergence demonstration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceEntry {
    pub d: usize,
    /// Stable coefficient c_d: loopless multigraphs with d edges.
    pub coefficient: Integer,
    /// c_d / q^d.
    pub term: Rational,
    /// Σ_{e ≤ d} c_e / q^e.
    pub partial_sum: Rational,
}

/// Divergence demonstration for the edge algebra k[x_{ij}]: the stable
/// graded multiplicities of the trivial module grow like multigraph
/// counts, so the would-be limit series Σ c_d q^{−d} has unboundedly
/// increasing partial sums for every integer q ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivergenceReport {
    pub q: Integer,
    pub entries: Vec<DivergenceEntry>,
    /// Whether the partial sums strictly increase across the probed range.
    pub partial_sums_strictly_increasing: bool,
    /// Whether the terms c_d/q^d themselves strictly increase from d = 1
    /// on: the clearest sign that the series cannot converge.
    pub terms_strictly_increasing: bool,
}

const MAX_DIVERGENCE_DEGREE: u64 = 14;

/// Number of S_n-orbits of degree-d monomials in the pair variables
/// x_{ij}, 1 ≤ i < j ≤ n: by Burnside, the average over cycle types of
/// the number of monomials fixed by a permutation, read off from the
/// cycle structure on unordered pairs.
fn multigraph_count_at(d: usize, n: usize) -> Result<Integer> {
    let mut acc = Rational::zero();
    for lambda in partitions(n) {
        let label = DoublePartition::pure_positive(lambda.clone());
        let z = centralizer_order(&label, GroupKind::A)?;
        // Orbit lengths of the cycle type acting on unordered pairs.
        let mut lengths: BTreeMap<usize, usize> = BTreeMap::new();
        let parts = lambda.parts();
        for (i, &r) in parts.iter().enumerate() {
            // Pairs across two distinct cycles: gcd(r, s) orbits of
            // length lcm(r, s).
            for &s in &parts[i + 1..] {
                let g = gcd(r, s);
                *lengths.entry(r / g * s).or_insert(0) += g;
            }
            // Pairs within one r-cycle.
            if r % 2 == 1 {
                if r > 1 {
                    *lengths.entry(r).or_insert(0) += (r - 1) / 2;
                }
            } else {
                if r / 2 > 1 {
                    *lengths.entry(r).or_insert(0) += r / 2 - 1;
                }
                *lengths.entry(r / 2).or_insert(0) += 1;
            }
        }
        let mut denominator = GradedSeries::one();
        for (&len, &mult) in &lengths {
            if len > d {
                continue;
            }
            for _ in 0..mult {
                denominator = denominator.mul_trunc(&GradedSeries::one_minus_tk(len), d);
            }
        }
        let fixed = denominator.inverse_trunc(d)?.coefficient(d);
        acc += fixed / Rational::from_integer(z);
    }
    if !acc.is_integer() {
        return Err(Error::InternalConsistency(format!(
            "Burnside average {acc} is not an integer at d={d}, n={n}"
        )));
    }
    Ok(acc.to_integer())
}

/// Computes the divergence report up to degree d_max at a fixed integer
/// q ≥ 2. Each stable coefficient is read at n = 2d and confirmed at
/// n = 2d + 1.
pub fn divergence_demo(d_max: usize, q: &Integer) -> Result<DivergenceReport> {
    let x = validate_q(q)?;
    if d_max as u64 > MAX_DIVERGENCE_DEGREE {
        return Err(Error::BudgetExceeded {
            required: format!("divergence demo to degree {d_max}"),
            cap: MAX_DIVERGENCE_DEGREE,
        });
    }
    let mut entries = Vec::with_capacity(d_max + 1);
    let mut sum = Rational::zero();
    for d in 0..=d_max {
        let coefficient = multigraph_count_at(d, 2 * d)?;
        let witness = multigraph_count_at(d, 2 * d + 1)?;
        if coefficient != witness {
            return Err(Error::NotStabilized {
                n: 2 * d,
                value_at_n: coefficient.to_string(),
                value_at_next: witness.to_string(),
            });
        }
        let term = Rational::from_integer(coefficient.clone()) * rat_pow(&x, d as i64);
        sum += &term;
        entries.push(DivergenceEntry {
            d,
            coefficient,
            term,
            partial_sum: sum.clone(),
        });
    }
    let partial_sums_strictly_increasing = entries
        .windows(2)
        .all(|w| w[1].partial_sum > w[0].partial_sum);
    let terms_strictly_increasing = entries
        .windows(2)
        .skip(1)
        .all(|w| w[1].term > w[0].term);
    Ok(DivergenceReport {
        q: q.clone(),
        entries,
        partial_sums_strictly_increasing,
        terms_strictly_increasing,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
