//! Symmetric and hyperoctahedral groups: elements, cycle types, conjugacy
//! classes and their sizes.
//!
//! Elements are signed permutations σ of {±1, …, ±n} with σ(−i) = −σ(i),
//! stored through the images of 1, …, n. Type A restricts to all-positive
//! images. Conjugacy classes are labelled by [`DoublePartition`]s: the
//! multiset of positive-cycle lengths and the multiset of negative-cycle
//! lengths, where a cycle of the underlying permutation is negative when an
//! odd number of sign flips occur along it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{double_partitions, partitions, DoublePartition, Partition};
use crate::rational::{factorial, int_pow, Integer};

/// Which family of Weyl groups is being used.
///
/// `TypeBc` is the hyperoctahedral group of order 2^n·n! (the Weyl group of
/// both Sp_2n and SO_{2n+1}, which share all data computed here). `TypeA`
/// is the symmetric group S_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    A,
    Bc,
}

impl GroupKind {
    /// Stable lower-case token used in CLI flags and serialized output.
    pub fn token(self) -> &'static str {
        match self {
            GroupKind::A => "a",
            GroupKind::Bc => "bc",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(GroupKind::A),
            "bc" => Ok(GroupKind::Bc),
            other => Err(Error::Validation(format!(
                "unknown group kind {other:?} (expected \"a\" or \"bc\")"
            ))),
        }
    }
}

/// A signed permutation in window notation: `images[i-1] = σ(i)`, with the
/// convention σ(−i) = −σ(i) extending it to all of {±1, …, ±n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    /// Validates that the absolute values of `images` form a permutation of
    /// 1..=n and that no image is 0 or out of range.
    pub fn new(images: Vec<i64>) -> Result<Self> {
        let n = images.len() as i64;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let a = v.abs();
            if a < 1 || a > n {
                return Err(Error::Validation(format!(
                    "image {v} out of range for n = {n}"
                )));
            }
            let idx = (a - 1) as usize;
            if seen[idx] {
                return Err(Error::Validation(format!(
                    "absolute image {a} repeated in {images:?}"
                )));
            }
            seen[idx] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i64).collect(),
        }
    }

    /// Number of letters being permuted.
    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Window of images of 1..=n.
    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// σ(i) for any i in {±1, …, ±n}.
    pub fn image(&self, i: i64) -> i64 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    /// True when every image is positive, i.e. the element lies in the
    /// symmetric subgroup.
    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    /// Composition acting on the left: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != other.rank() {
            return Err(Error::SizeMismatch(format!(
                "cannot compose ranks {} and {}",
                self.rank(),
                other.rank()
            )));
        }
        let images = (1..=self.rank() as i64)
            .map(|i| self.image(other.image(i)))
            .collect();
        Ok(SignedPermutation { images })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0i64; self.rank()];
        for i in 1..=self.rank() as i64 {
            let j = self.image(i);
            images[(j.abs() - 1) as usize] = if j > 0 { i } else { -i };
        }
        SignedPermutation { images }
    }

    /// Signed cycle type: positive-cycle lengths in the first partition,
    /// negative-cycle lengths in the second.
    ///
    /// Cycles are the cycles of the underlying unsigned permutation |σ| on
    /// {1, …, n}; a cycle is negative exactly when the product of the signs
    /// of σ over its entries is −1.
    pub fn signed_cycle_type(&self) -> DoublePartition {
        let n = self.rank();
        let mut visited = vec![false; n];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 1..=n as i64 {
            if visited[(start - 1) as usize] {
                continue;
            }
            let mut len = 0usize;
            let mut sign = 1i64;
            let mut cur = start;
            loop {
                visited[(cur - 1) as usize] = true;
                let next = self.image(cur);
                sign *= next.signum();
                len += 1;
                cur = next.abs();
                if cur == start {
                    break;
                }
            }
            if sign > 0 {
                positive.push(len);
            } else {
                negative.push(len);
            }
        }
        DoublePartition::new(
            Partition::from_unsorted(positive).expect("cycle lengths are positive"),
            Partition::from_unsorted(negative).expect("cycle lengths are positive"),
        )
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// |W|: n! in type A, 2^n·n! in type B/C.
pub fn group_order(n: usize, kind: GroupKind) -> Integer {
    match kind {
        GroupKind::A => factorial(n),
        GroupKind::Bc => factorial(n) * int_pow(&Integer::from(2u32), n as u32),
    }
}

/// Default ceiling on how many group elements [`enumerate_group`] will
/// materialize.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Lists every group element, permutations in lexicographic order of their
/// windows and, in type B/C, sign patterns in binary order within each
/// permutation. Fails with [`Error::BudgetExceeded`] when the group order
/// exceeds `cap` (default [`DEFAULT_ENUMERATION_CAP`]).
pub fn enumerate_group(
    n: usize,
    kind: GroupKind,
    cap: Option<u64>,
) -> Result<Vec<SignedPermutation>> {
    let cap = cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
    let order = group_order(n, kind);
    if order > Integer::from(cap) {
        return Err(Error::BudgetExceeded {
            required: order.to_string(),
            cap,
        });
    }
    let mut out = Vec::new();
    let mut window: Vec<i64> = (1..=n as i64).collect();
    loop {
        match kind {
            GroupKind::A => out.push(SignedPermutation {
                images: window.clone(),
            }),
            GroupKind::Bc => {
                for mask in 0u64..(1u64 << n) {
                    let images = window
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(SignedPermutation { images });
                }
            }
        }
        if !next_permutation(&mut window) {
            break;
        }
    }
    Ok(out)
}

/// Advances `a` to its lexicographic successor; returns false at the last
/// arrangement.
fn next_permutation(a: &mut [i64]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Order of the centralizer of any element with the given cycle type.
///
/// Type A (`label.negative` must be empty): ∏_r r^{n_r}·n_r!.
/// Type B/C: ∏_r (2r)^{n_r(λ)}·n_r(λ)! · ∏_r (2r)^{n_r(μ)}·n_r(μ)!.
pub fn centralizer_order(label: &DoublePartition, kind: GroupKind) -> Result<Integer> {
    let factor = |p: &Partition, cycle_weight: usize| -> Integer {
        let mut z = Integer::from(1u32);
        for (&r, &m) in p.multiplicities().iter() {
            z *= int_pow(&Integer::from((cycle_weight * r) as u64), m as u32);
            z *= factorial(m);
        }
        z
    };
    match kind {
        GroupKind::A => {
            if !label.negative.is_empty() {
                return Err(Error::KindMismatch {
                    expected: "type A label with empty negative part".into(),
                    got: label.render(),
                });
            }
            Ok(factor(&label.positive, 1))
        }
        GroupKind::Bc => Ok(factor(&label.positive, 2) * factor(&label.negative, 2)),
    }
}

/// One conjugacy class: its label, centralizer order and size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassDatum {
    pub label: DoublePartition,
    pub centralizer_order: Integer,
    pub size: Integer,
}

/// All conjugacy classes of W_n in the canonical label order
/// (descending-lexicographic partitions; for B/C, positive size descending
/// first). Sizes are |W|/z, so they always sum to the group order.
pub fn conjugacy_classes(n: usize, kind: GroupKind) -> Vec<ConjugacyClassDatum> {
    let order = group_order(n, kind);
    let labels: Vec<DoublePartition> = match kind {
        GroupKind::A => partitions(n).map(DoublePartition::pure_positive).collect(),
        GroupKind::Bc => double_partitions(n).collect(),
    };
    labels
        .into_iter()
        .map(|label| {
            let z = centralizer_order(&label, kind).expect("labels match kind");
            let size = &order / &z;
            ConjugacyClassDatum {
                label,
                centralizer_order: z,
                size,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

    #[test]
    fn validation_rejects_bad_windows() {
        assert!(SignedPermutation::new(vec![1, -3]).is_err());
        assert!(SignedPermutation::new(vec![2, -2]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
        assert!(SignedPermutation::new(vec![-2, 1]).is_ok());
    }

    #[test]
    fn compose_and_inverse_are_consistent_on_all_of_b3() {
        let id = SignedPermutation::identity(3);
        for g in enumerate_group(3, GroupKind::Bc, None).unwrap() {
            let inv = g.inverse();
            assert_eq!(g.compose(&inv).unwrap(), id);
            assert_eq!(inv.compose(&g).unwrap(), id);
        }
        // Composition order: (σ∘τ)(i) = σ(τ(i)).
        let s = SignedPermutation::new(vec![2, 1, 3]).unwrap();
        let t = SignedPermutation::new(vec![-1, 2, 3]).unwrap();
        assert_eq!(s.compose(&t).unwrap().images(), &[-2, 1, 3]);
        assert_eq!(t.compose(&s).unwrap().images(), &[2, -1, 3]);
    }

    #[test]
    fn signed_cycle_type_examples() {
        // 1 → −3 → −(−2) = 2 → 1: one 3-cycle with two sign flips, positive.
        let g = SignedPermutation::new(vec![-3, 1, -2]).unwrap();
        assert_eq!(g.signed_cycle_type().render(), "(3),()");
        // Three sign flips along the cycle: negative.
        let g = SignedPermutation::new(vec![-3, -1, -2]).unwrap();
        assert_eq!(g.signed_cycle_type().render(), "(),(3)");
        // Mixed fixed points: +1 is a positive 1-cycle, −2 a negative one.
        let g = SignedPermutation::new(vec![1, -2]).unwrap();
        assert_eq!(g.signed_cycle_type().render(), "(1),(1)");
        assert_eq!(
            SignedPermutation::identity(4).signed_cycle_type().render(),
            "(1,1,1,1),()"
        );
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(4, GroupKind::A), int(24));
        assert_eq!(group_order(4, GroupKind::Bc), int(384));
        assert_eq!(
            enumerate_group(4, GroupKind::Bc, None).unwrap().len(),
            384
        );
        let err = enumerate_group(4, GroupKind::Bc, Some(100)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { cap: 100, .. }));
    }

    #[test]
    fn enumeration_is_duplicate_free_and_deterministic() {
        let all = enumerate_group(2, GroupKind::Bc, None).unwrap();
        let set: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        // First few elements: identity window with ascending sign masks.
        assert_eq!(all[0].images(), &[1, 2]);
        assert_eq!(all[1].images(), &[-1, 2]);
        assert_eq!(all[2].images(), &[1, -2]);
        assert_eq!(all[3].images(), &[-1, -2]);
        assert_eq!(all[4].images(), &[2, 1]);
    }

    #[test]
    fn frozen_centralizer_orders_b2_b3() {
        let expect_b2 = [
            ("(1,1),()", 8),
            ("(2),()", 4),
            ("(1),(1)", 4),
            ("(),(2)", 4),
            ("(),(1,1)", 8),
        ];
        for (lit, z) in expect_b2 {
            let label = DoublePartition::parse(lit).unwrap();
            assert_eq!(
                centralizer_order(&label, GroupKind::Bc).unwrap(),
                int(z),
                "{lit}"
            );
        }
        let expect_b3 = [
            ("(1,1,1),()", 48),
            ("(2,1),()", 8),
            ("(3),()", 6),
            ("(1,1),(1)", 16),
            ("(2),(1)", 8),
            ("(1),(1,1)", 16),
            ("(1),(2)", 8),
            ("(),(1,1,1)", 48),
            ("(),(2,1)", 8),
            ("(),(3)", 6),
        ];
        for (lit, z) in expect_b3 {
            let label = DoublePartition::parse(lit).unwrap();
            assert_eq!(
                centralizer_order(&label, GroupKind::Bc).unwrap(),
                int(z),
                "{lit}"
            );
        }
    }

    #[test]
    fn type_a_centralizers_and_kind_mismatch() {
        // z for (2,1,1) in S_4: 2^1·1! · 1^2·2! = 4.
        let label = DoublePartition::parse("(2,1,1),()").unwrap();
        assert_eq!(centralizer_order(&label, GroupKind::A).unwrap(), int(4));
        let bad = DoublePartition::parse("(1),(1)").unwrap();
        assert!(matches!(
            centralizer_order(&bad, GroupKind::A),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn class_sizes_sum_to_group_order_up_to_n6() {
        for kind in [GroupKind::A, GroupKind::Bc] {
            for n in 0..=6 {
                let classes = conjugacy_classes(n, kind);
                let total: Integer = classes.iter().map(|c| c.size.clone()).sum();
                assert_eq!(total, group_order(n, kind), "n={n} kind={kind}");
                for c in &classes {
                    assert_eq!(
                        &c.size * &c.centralizer_order,
                        group_order(n, kind),
                        "n={n} {}",
                        c.label
                    );
                }
            }
        }
    }

    /// Conjugacy orbits computed by BFS over explicit conjugation, with no
    /// reference to cycle types, must match the labelled classes exactly.
    fn conjugacy_oracle(n: usize, kind: GroupKind) {
        let elements = enumerate_group(n, kind, None).unwrap();
        let index: HashMap<&SignedPermutation, usize> =
            elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut orbit_of = vec![usize::MAX; elements.len()];
        let mut orbit_count = 0usize;
        for start in 0..elements.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let orbit_id = orbit_count;
            orbit_count += 1;
            let mut queue = VecDeque::from([start]);
            orbit_of[start] = orbit_id;
            while let Some(i) = queue.pop_front() {
                for x in &elements {
                    let conj = x
                        .compose(&elements[i])
                        .unwrap()
                        .compose(&x.inverse())
                        .unwrap();
                    let j = index[&conj];
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = orbit_id;
                        queue.push_back(j);
                    }
                }
            }
        }
        // Bucket the same elements by computed cycle type.
        let mut by_type: BTreeMap<DoublePartition, HashSet<usize>> = BTreeMap::new();
        for (i, g) in elements.iter().enumerate() {
            by_type.entry(g.signed_cycle_type()).or_default().insert(i);
        }
        assert_eq!(by_type.len(), orbit_count, "n={n} kind={kind}");
        for (label, members) in &by_type {
            let ids: HashSet<usize> = members.iter().map(|&i| orbit_of[i]).collect();
            assert_eq!(ids.len(), 1, "cycle type {label} split across orbits");
        }
        // And the labelled class table agrees with the observed buckets.
        let classes = conjugacy_classes(n, kind);
        assert_eq!(classes.len(), by_type.len());
        for c in &classes {
            let members = by_type
                .get(&c.label)
                .unwrap_or_else(|| panic!("class {} missing from enumeration", c.label));
            assert_eq!(int(members.len() as i64), c.size, "size of {}", c.label);
        }
    }

    #[test]
    fn conjugacy_oracle_type_bc_up_to_n4() {
        for n in 1..=4 {
            conjugacy_oracle(n, GroupKind::Bc);
        }
    }

    #[test]
    fn conjugacy_oracle_type_a_up_to_n6() {
        for n in 1..=6 {
            conjugacy_oracle(n, GroupKind::A);
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("a".parse::<GroupKind>().unwrap(), GroupKind::A);
        assert_eq!("BC".parse::<GroupKind>().unwrap(), GroupKind::Bc);
        assert!("d".parse::<GroupKind>().is_err());
    }
}
