//! Integer partitions and double partitions.
//!
//! Partitions label conjugacy classes and irreducible representations of the
//! symmetric groups; ordered pairs of partitions (`DoublePartition`) do the
//! same for the hyperoctahedral groups, recording positive and negative
//! signed cycle types.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Integer;

/// A partition: weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Validation(format!(
                    "parts not weakly decreasing: {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Validation(format!(
                "parts must be positive: {:?}",
                parts
            )));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Single-row partition `(n)`; the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// Parts, weakly decreasing.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Number of parts equal to `r` (the multiplicity n_r).
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// Map part size -> multiplicity, ascending in part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Merges two partitions as multisets of parts.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .copied()
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Renders as `(3,1,1)`; the empty partition as `()`.
    pub fn render(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("({})", inner.join(","))
    }

    /// Parses the format produced by [`Partition::render`].
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| {
                Error::Validation(format!("partition literal must be parenthesized: {s:?}"))
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Validation(format!("bad partition part: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// An ordered pair of partitions `(λ, μ)`.
///
/// As a conjugacy-class label of the hyperoctahedral group, `positive`
/// collects the lengths of positive cycles and `negative` the lengths of
/// negative cycles. The same pairs label the irreducible representations.
/// Symmetric-group data is carried with `negative` empty.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct DoublePartition {
    pub positive: Partition,
    pub negative: Partition,
}

impl DoublePartition {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        Self { positive, negative }
    }

    /// `(λ, ∅)` with λ = `positive`.
    pub fn pure_positive(positive: Partition) -> Self {
        Self::new(positive, Partition::empty())
    }

    /// `|λ| + |μ|`.
    pub fn total(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    /// The identity class label `((1^n), ∅)`.
    pub fn identity(n: usize) -> Self {
        Self::pure_positive(Partition { parts: vec![1; n] })
    }

    /// Image cycle type under the sign-forgetting projection: the merged
    /// multiset of all cycle lengths.
    pub fn merged(&self) -> Partition {
        self.positive.merge(&self.negative)
    }

    /// Renders as `(3,1),(2)`.
    pub fn render(&self) -> String {
        format!("{},{}", self.positive.render(), self.negative.render())
    }

    /// Parses the format produced by [`DoublePartition::render`].
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = find_top_level_comma(s).ok_or_else(|| {
            Error::Validation(format!(
                "double partition literal must be \"(λ),(μ)\": {s:?}"
            ))
        })?;
        let positive = Partition::parse(&s[..split])?;
        let negative = Partition::parse(&s[split + 1..])?;
        Ok(Self::new(positive, negative))
    }
}

/// Index of the comma separating `(..)` from `(..)`, ignoring commas inside
/// parentheses.
pub(crate) fn find_top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All partitions of `n` in descending lexicographic order:
/// `(n)` first, `(1,…,1)` last. This ordering is a convention of this
/// library (chosen for deterministic table output) and is used everywhere
/// partitions are listed.
pub fn partitions(n: usize) -> PartitionIter {
    PartitionIter {
        next: Some(Partition::row(n)),
    }
}

/// Lazy stream over the partitions of a fixed integer.
pub struct PartitionIter {
    next: Option<Partition>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(current)
    }
}

/// Next partition after `p` in descending lexicographic order.
fn successor(p: &Partition) -> Option<Partition> {
    let parts = &p.parts;
    // Rightmost part that can still shrink.
    let i = parts.iter().rposition(|&x| x > 1)?;
    let mut next: Vec<usize> = parts[..=i].to_vec();
    next[i] -= 1;
    let cap = next[i];
    // Everything removed (the decremented unit plus all trailing 1s) is
    // redistributed greedily into parts of size at most `cap`.
    let mut rem = parts.len() - i; // (parts.len() - 1 - i) ones, plus 1
    while rem >= cap {
        next.push(cap);
        rem -= cap;
    }
    if rem > 0 {
        next.push(rem);
    }
    Some(Partition { parts: next })
}

/// All double partitions of `n`, ordered by size of the positive part
/// descending, then positive part in descending lexicographic order, then
/// negative part likewise. This matches the class ordering used in every
/// rendered table.
pub fn double_partitions(n: usize) -> impl Iterator<Item = DoublePartition> {
    (0..=n).rev().flat_map(move |k| {
        partitions(k).flat_map(move |pos| {
            partitions(n - k).map(move |neg| DoublePartition::new(pos.clone(), neg))
        })
    })
}

/// Number of partitions of `n`, by the bounded-largest-part recurrence
/// `p(n, k) = p(n−k, k) + p(n, k−1)`.
pub fn partition_count(n: usize) -> Integer {
    // table[m][k] = number of partitions of m with all parts <= k
    let mut table = vec![vec![Integer::from(0u32); n + 1]; n + 1];
    for k in 0..=n {
        table[0][k] = Integer::from(1u32);
    }
    for m in 1..=n {
        for k in 1..=n {
            let mut v = table[m][k - 1].clone();
            if m >= k {
                v += table[m - k][k].clone();
            }
            table[m][k] = v;
        }
    }
    table[n][n].clone()
}

/// Number of double partitions of `n`.
pub fn double_partition_count(n: usize) -> Integer {
    (0..=n)
        .map(|k| partition_count(k) * partition_count(n - k))
        .sum()
}
