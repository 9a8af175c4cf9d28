//! Graded structure of coinvariant algebras.
//!
//! The coinvariant algebra R_n of W_n is the polynomial ring in n
//! variables modulo the ideal generated by the positive-degree invariants;
//! it carries the regular representation, graded with top degree n² in
//! type B/C and n(n−1)/2 in type A. Two independent computations of its
//! graded multiplicities live here:
//!
//! - the Molien route: the graded character of R_n at a class σ is
//!   ∏_i (1 − t^{d_i}) / det(1 − tσ), a polynomial because the numerator is
//!   divisible by the characteristic factors, and multiplicities follow by
//!   averaging against an irreducible character;
//! - the tableau route (type B/C): the multiplicity of V_(λ,μ) in degree d
//!   counts double standard tableaux of shape (λ, μ) with flag major
//!   index d.
//!
//! Padded families track a single irreducible label across all ranks at
//! once (first row growing with n); their degree-d multiplicities become
//! independent of n once n is large enough, and [`stable_multiplicity`]
//! returns that limit after confirming it with a higher-rank witness.

use std::fmt;

use num::{One, Zero};
use rayon::prelude::*;

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{find_top_level_comma, DoublePartition, Partition};
use crate::rational::{Integer, Rational};
use crate::series::GradedSeries;
use crate::tableaux::flag_major_generating_series;
use crate::weyl::{group_order, GroupKind};

/// Top degree of the coinvariant algebra: n² for B/C, n(n−1)/2 for A.
pub fn top_degree(n: usize, kind: GroupKind) -> usize {
    match kind {
        GroupKind::Bc => n * n,
        GroupKind::A => n * n.saturating_sub(1) / 2,
    }
}

/// Degrees of the basic invariants: 2, 4, …, 2n for B/C and 1, 2, …, n
/// for A.
pub fn invariant_degrees(n: usize, kind: GroupKind) -> Vec<usize> {
    match kind {
        GroupKind::Bc => (1..=n).map(|i| 2 * i).collect(),
        GroupKind::A => (1..=n).collect(),
    }
}

/// det(1 − tσ) on the reflection representation, as a polynomial in t:
/// each positive r-cycle contributes (1 − t^r), each negative r-cycle
/// (1 + t^r); type A classes only have positive cycles.
pub fn characteristic_factor(class: &DoublePartition, kind: GroupKind) -> Result<GradedSeries> {
    if kind == GroupKind::A && !class.negative.is_empty() {
        return Err(Error::KindMismatch {
            expected: "type A class with empty negative part".into(),
            got: class.render(),
        });
    }
    let mut det = GradedSeries::one();
    for &r in class.positive.parts() {
        det = &det * &GradedSeries::one_minus_tk(r);
    }
    for &r in class.negative.parts() {
        det = &det * &GradedSeries::one_plus_tk(r);
    }
    Ok(det)
}

/// Graded character of the coinvariant algebra at the given class:
/// ∏_i (1 − t^{d_i}) / det(1 − tσ). The division is exact; a nonzero
/// remainder would indicate an internal inconsistency and is reported as
/// such.
pub fn molien_graded_character(class: &DoublePartition, kind: GroupKind) -> Result<GradedSeries> {
    let n = class.total();
    let mut numerator = GradedSeries::one();
    for d in invariant_degrees(n, kind) {
        numerator = &numerator * &GradedSeries::one_minus_tk(d);
    }
    numerator.exact_div(&characteristic_factor(class, kind)?)
}

/// Hilbert series of the coinvariant algebra (the graded character at the
/// identity); its value at t = 1 is the group order.
pub fn poincare_series(n: usize, kind: GroupKind) -> GradedSeries {
    molien_graded_character(&DoublePartition::identity(n), kind)
        .expect("identity class is valid for every kind")
}

/// Total dimension of the coinvariant algebra: the order of W_n.
pub fn coinvariant_dimension(n: usize, kind: GroupKind) -> Integer {
    group_order(n, kind)
}

/// Molien-route graded multiplicity series of one irreducible:
/// (1/|W|) Σ_C |C| · χ_label(C) · χ_R(C; t), degree by degree.
///
/// This is the slow, independent cross-check for the tableau route.
pub fn multiplicity_series_molien(
    label: &DoublePartition,
    kind: GroupKind,
) -> Result<GradedSeries> {
    let n = label.total();
    let table = character_table(n, kind)?;
    multiplicity_series_molien_with_table(&table, label)
}

fn multiplicity_series_molien_with_table(
    table: &CharacterTable,
    label: &DoublePartition,
) -> Result<GradedSeries> {
    let row = table
        .label_index(label)
        .ok_or_else(|| Error::Validation(format!("unknown irreducible label {label}")))?;
    let mut acc = GradedSeries::zero();
    for (j, class) in table.classes().iter().enumerate() {
        let weight = Rational::from_integer(&class.size * table.value(row, j));
        if weight.is_zero() {
            continue;
        }
        let chi = molien_graded_character(&class.label, table.kind())?;
        acc = &acc + &chi.scale(&weight);
    }
    let series = acc.scale(&(Rational::one() / Rational::from_integer(group_order(table.n(), table.kind()))));
    for (d, c) in series.coefficients().iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::InternalConsistency(format!(
                "non-integral multiplicity {c} of {label} in degree {d}"
            )));
        }
    }
    Ok(series)
}

/// Graded multiplicity series of one irreducible of the hyperoctahedral
/// group, by the flag-major-index statistic on double standard tableaux.
pub fn multiplicity_series(label: &DoublePartition) -> Result<GradedSeries> {
    flag_major_generating_series(label)
}

/// Multiplicity of V_label in the degree-d graded piece (tableau route).
pub fn multiplicity(label: &DoublePartition, d: usize) -> Result<Integer> {
    let series = multiplicity_series(label)?;
    let c = series.coefficient(d);
    debug_assert!(c.is_integer());
    Ok(c.to_integer())
}

/// Graded multiplicities of every irreducible of W_n: rows in canonical
/// label order, columns degrees 0..=top_degree.
#[derive(Debug)]
pub struct GradedMultiplicityTable {
    n: usize,
    kind: GroupKind,
    labels: Vec<DoublePartition>,
    series: Vec<GradedSeries>,
}

impl GradedMultiplicityTable {
    /// Computes the full table: tableau route in type B/C, Molien route in
    /// type A.
    pub fn compute(n: usize, kind: GroupKind) -> Result<Self> {
        let table = character_table(n, kind)?;
        let labels: Vec<DoublePartition> = table.labels().to_vec();
        let series: Result<Vec<GradedSeries>> = labels
            .par_iter()
            .map(|label| match kind {
                GroupKind::Bc => multiplicity_series(label),
                GroupKind::A => multiplicity_series_molien_with_table(&table, label),
            })
            .collect();
        Ok(Self {
            n,
            kind,
            labels,
            series: series?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn labels(&self) -> &[DoublePartition] {
        &self.labels
    }

    /// Highest degree carried by the table.
    pub fn top_degree(&self) -> usize {
        top_degree(self.n, self.kind)
    }

    /// Multiplicity series of the row with the given label.
    pub fn series(&self, label: &DoublePartition) -> Result<&GradedSeries> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.series[i])
            .ok_or_else(|| Error::Validation(format!("unknown irreducible label {label}")))
    }

    pub fn series_by_row(&self, row: usize) -> &GradedSeries {
        &self.series[row]
    }

    /// Checks Σ_label mult(label, d)·dim(label) against the Hilbert series
    /// coefficient for every degree.
    pub fn verify_dimension_identity(&self) -> Result<()> {
        let poincare = poincare_series(self.n, self.kind);
        let dims: Vec<Rational> = self
            .labels
            .iter()
            .map(|l| Rational::from_integer(crate::characters::bn_dimension(l)))
            .collect();
        for d in 0..=self.top_degree() {
            let mut acc = Rational::zero();
            for (i, s) in self.series.iter().enumerate() {
                acc += s.coefficient(d) * &dims[i];
            }
            if acc != poincare.coefficient(d) {
                return Err(Error::InternalConsistency(format!(
                    "graded dimensions disagree in degree {d}: {acc} vs {}",
                    poincare.coefficient(d)
                )));
            }
        }
        Ok(())
    }
}

/// A family of irreducible labels across all ranks: the label at rank n is
/// ((n − a, tail), negative) with a = |tail| + |negative|. Written
/// `(n-a,tail...),(negative)`, e.g. `(n-2,1),(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PaddedFamily {
    tail: Partition,
    negative: Partition,
}

impl PaddedFamily {
    pub fn new(tail: Partition, negative: Partition) -> Self {
        Self { tail, negative }
    }

    pub fn tail(&self) -> &Partition {
        &self.tail
    }

    pub fn negative(&self) -> &Partition {
        &self.negative
    }

    /// |tail| + |negative|: how much of each label is not in the first row.
    pub fn fixed_size(&self) -> usize {
        self.tail.size() + self.negative.size()
    }

    /// Smallest rank at which the family produces a valid label (the first
    /// row must be at least as long as the next row).
    pub fn min_rank(&self) -> usize {
        self.fixed_size() + self.tail.first_part()
    }

    /// The concrete label at rank n.
    pub fn label_at(&self, n: usize) -> Result<DoublePartition> {
        if n < self.min_rank() {
            return Err(Error::Validation(format!(
                "family {self} needs rank at least {}, got {n}",
                self.min_rank()
            )));
        }
        let first = n - self.fixed_size();
        let mut parts = Vec::with_capacity(self.tail.num_parts() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(self.tail.parts());
        Ok(DoublePartition::new(
            Partition::new(parts).expect("first row dominates tail"),
            self.negative.clone(),
        ))
    }

    /// Parses `(n-a,tail...),(negative)`; `a` must equal the total size of
    /// the tail and negative parts, and is omitted when zero (`(n),()`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = find_top_level_comma(s).ok_or_else(|| {
            Error::Validation(format!("family literal must be \"(n-a,…),(μ)\": {s:?}"))
        })?;
        let head = s[..split].trim();
        let negative = Partition::parse(&s[split + 1..])?;
        let inner = head
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Validation(format!("family head must be parenthesized: {head:?}"))
            })?;
        let mut tokens = inner.split(',').map(str::trim);
        let first = tokens.next().unwrap_or("");
        let a: usize = if first == "n" {
            0
        } else if let Some(rest) = first.strip_prefix("n-") {
            rest.trim().parse().map_err(|_| {
                Error::Validation(format!("bad offset in family head: {first:?}"))
            })?
        } else {
            return Err(Error::Validation(format!(
                "family head must start with \"n\" or \"n-a\": {first:?}"
            )));
        };
        let tail_parts = tokens
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Validation(format!("bad family tail part: {tok:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let tail = Partition::new(tail_parts)?;
        let family = Self::new(tail, negative);
        if a != family.fixed_size() {
            return Err(Error::Validation(format!(
                "family offset n-{a} does not match tail and negative sizes (expected n-{})",
                family.fixed_size()
            )));
        }
        Ok(family)
    }
}

impl fmt::Display for PaddedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.fixed_size();
        write!(f, "(")?;
        if a == 0 {
            write!(f, "n")?;
        } else {
            write!(f, "n-{a}")?;
        }
        for p in self.tail.parts() {
            write!(f, ",{p}")?;
        }
        write!(f, "),{}", self.negative.render())
    }
}

/// Rank used to read off the degree-d multiplicity of a family (and one
/// more as a witness).
fn stabilization_probe(family: &PaddedFamily, d: usize) -> usize {
    (d + family.fixed_size() + family.negative.size() + 2).max(family.min_rank())
}

/// The n-independent multiplicity of the family's irreducible in degree d
/// of the coinvariant algebra, once n is large.
///
/// The value is computed at a probe rank past the stabilization threshold
/// and confirmed at the next rank; a disagreement (which would falsify the
/// stabilization claim) is reported as [`Error::NotStabilized`].
pub fn stable_multiplicity(family: &PaddedFamily, d: usize) -> Result<Integer> {
    let series = stable_multiplicity_series(family, d)?;
    let c = series.coefficient(d);
    debug_assert!(c.is_integer());
    Ok(c.to_integer())
}

/// Stable multiplicities of the family in all degrees 0..=dmax at once,
/// with the same probe-and-witness confirmation in every degree.
pub fn stable_multiplicity_series(family: &PaddedFamily, dmax: usize) -> Result<GradedSeries> {
    let probe = stabilization_probe(family, dmax);
    let at_probe = multiplicity_series(&family.label_at(probe)?)?.truncate(dmax);
    let at_witness = multiplicity_series(&family.label_at(probe + 1)?)?.truncate(dmax);
    if at_probe != at_witness {
        for d in 0..=dmax {
            if at_probe.coefficient(d) != at_witness.coefficient(d) {
                return Err(Error::NotStabilized {
                    n: probe,
                    value_at_n: at_probe.coefficient(d).to_string(),
                    value_at_next: at_witness.coefficient(d).to_string(),
                });
            }
        }
    }
    Ok(at_probe)
}
