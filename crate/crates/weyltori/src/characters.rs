//! Irreducible characters of symmetric and hyperoctahedral groups.
//!
//! Symmetric-group characters are evaluated with the Murnaghan–Nakayama
//! rule on beta-sets (first-column hook lengths), which prunes invalid
//! border-strip removals automatically. Hyperoctahedral irreducibles are
//! labelled by pairs of partitions (λ, μ) with |λ| + |μ| = n and realized
//! as
//!
//! ```text
//!   V_(λ,μ) = Ind_{B_k × B_m}^{B_n} ( (χ^λ ∘ π) ⊠ (δ · (χ^μ ∘ π)) )
//! ```
//!
//! where π : B_j → S_j forgets signs, δ(σ) = (−1)^{#negative cycles}, and
//! k = |λ|, m = |μ|. Induced values are computed by the class-splitting
//! formula, which stays in integer arithmetic throughout.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};
use rayon::prelude::*;

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::partitions::{partitions, DoublePartition, Partition};
use crate::rational::{binomial, factorial, Integer, Rational};
use crate::weyl::{conjugacy_classes, group_order, ConjugacyClassDatum, GroupKind};

/// χ^λ(μ): the symmetric-group character value, by Murnaghan–Nakayama.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> Result<Integer> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "character label {lambda} and class {mu} have different sizes"
        )));
    }
    Ok(mn_value(lambda.parts(), mu.parts()))
}

/// Recursive strip removal on beta-sets. `beta[j] = λ_j + (m−1−j)` encodes
/// λ with m rows; removing a border strip of length k replaces some β by
/// β − k when β − k is unoccupied, with sign (−1)^{#entries strictly
/// between the two}.
fn mn_value(lambda: &[usize], strips: &[usize]) -> Integer {
    if strips.is_empty() {
        return Integer::one();
    }
    let k = strips[0];
    let m = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(j, &p)| p + (m - 1 - j))
        .collect();
    let mut total = Integer::zero();
    for j in 0..m {
        if beta[j] < k {
            continue;
        }
        let target = beta[j] - k;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| target < b && b < beta[j]).count();
        let mut next_beta = beta.clone();
        next_beta[j] = target;
        next_beta.sort_unstable_by(|a, b| b.cmp(a));
        let next_lambda = beta_to_parts(&next_beta);
        let sub = mn_value(&next_lambda, &strips[1..]);
        if between % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    total
}

/// Inverse of the beta-set encoding, dropping zero rows.
fn beta_to_parts(beta_desc: &[usize]) -> Vec<usize> {
    let m = beta_desc.len();
    beta_desc
        .iter()
        .enumerate()
        .map(|(j, &b)| b - (m - 1 - j))
        .take_while(|&p| p > 0)
        .collect()
}

/// Number of standard Young tableaux of shape λ, by the hook-length
/// formula.
pub fn hook_dimension(lambda: &Partition) -> Integer {
    let parts = lambda.parts();
    let conj_col = |j: usize| parts.iter().filter(|&&p| p > j).count();
    let mut denom = Integer::one();
    for (i, &p) in parts.iter().enumerate() {
        for j in 0..p {
            let hook = (p - j) + (conj_col(j) - i) - 1;
            denom *= Integer::from(hook as u64);
        }
    }
    factorial(lambda.size()) / denom
}

/// δ(σ) = (−1)^{number of negative cycles}: the linear character that is
/// −1 on sign-flipping generators.
pub fn delta_value(class: &DoublePartition) -> Integer {
    if class.negative.num_parts() % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Value at `class` of the pullback of χ^λ along the sign-forgetting
/// projection B_n → S_n.
pub fn pullback_value(lambda: &Partition, class: &DoublePartition) -> Result<Integer> {
    sn_character(lambda, &class.merged())
}

/// All sub-multisets of the parts of `p`, with their sizes and the number
/// of ways Π_r C(n_r, c_r) to select them from labelled cycles.
fn weighted_submultisets(p: &Partition) -> Vec<(Partition, usize, Integer)> {
    let mults: Vec<(usize, usize)> = p.multiplicities().into_iter().collect();
    let mut acc: Vec<(Vec<usize>, usize, Integer)> = vec![(Vec::new(), 0, Integer::one())];
    for &(r, n_r) in &mults {
        let mut next = Vec::with_capacity(acc.len() * (n_r + 1));
        for (parts, size, w) in &acc {
            for c in 0..=n_r {
                let mut parts = parts.clone();
                parts.extend(std::iter::repeat(r).take(c));
                next.push((parts, size + r * c, w * binomial(n_r, c)));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(parts, size, w)| {
            (
                Partition::from_unsorted(parts).expect("parts positive"),
                size,
                w,
            )
        })
        .collect()
}

/// Multiset difference of parts; `sub` must be contained in `p`.
fn multiset_difference(p: &Partition, sub: &Partition) -> Partition {
    let mut mults = p.multiplicities();
    for (&r, &m) in sub.multiplicities().iter() {
        *mults.get_mut(&r).expect("sub-multiset") -= m;
    }
    let mut parts = Vec::new();
    for (r, m) in mults {
        parts.extend(std::iter::repeat(r).take(m));
    }
    Partition::from_unsorted(parts).expect("parts positive")
}

/// Value at `class` (a cycle type in B_n) of the character induced from
/// the product character `chi1 ⊠ chi2` on the block subgroup
/// B_k × B_{n−k}.
///
/// The class of cycle type (A, B) meets the subgroup in the classes
/// obtained by splitting A and B as multisets; each split contributes the
/// product of the two character values weighted by the number of ways to
/// choose which cycles go to the first block:
///
/// ```text
///   χ_Ind(A, B) = Σ_splits ∏_r C(n_r(A), n_r(α₁))·C(n_r(B), n_r(β₁))
///                          · chi1(α₁, β₁) · chi2(α₂, β₂)
/// ```
pub fn induced_product_value(
    chi1: &dyn Fn(&DoublePartition) -> Integer,
    k: usize,
    chi2: &dyn Fn(&DoublePartition) -> Integer,
    class: &DoublePartition,
) -> Integer {
    let subs_a = weighted_submultisets(&class.positive);
    let subs_b = weighted_submultisets(&class.negative);
    let mut total = Integer::zero();
    for (a1, sa, wa) in &subs_a {
        for (b1, sb, wb) in &subs_b {
            if sa + sb != k {
                continue;
            }
            let a2 = multiset_difference(&class.positive, a1);
            let b2 = multiset_difference(&class.negative, b1);
            let v1 = chi1(&DoublePartition::new(a1.clone(), b1.clone()));
            if v1.is_zero() {
                continue;
            }
            let v2 = chi2(&DoublePartition::new(a2, b2));
            total += wa * wb * v1 * v2;
        }
    }
    total
}

/// χ_(λ,μ)(class): a single irreducible hyperoctahedral character value,
/// computed directly from the inducing construction (no table is built).
pub fn bn_irreducible_value(label: &DoublePartition, class: &DoublePartition) -> Result<Integer> {
    if label.total() != class.total() {
        return Err(Error::SizeMismatch(format!(
            "label {label} and class {class} have different sizes"
        )));
    }
    let lambda = label.positive.clone();
    let mu = label.negative.clone();
    let k = lambda.size();
    let chi1 = move |c: &DoublePartition| pullback_value(&lambda, c).expect("sizes match");
    let chi2 =
        move |c: &DoublePartition| delta_value(c) * pullback_value(&mu, c).expect("sizes match");
    Ok(induced_product_value(&chi1, k, &chi2, class))
}

/// dim V_(λ,μ) = C(n, |λ|)·f^λ·f^μ.
pub fn bn_dimension(label: &DoublePartition) -> Integer {
    binomial(label.total(), label.positive.size())
        * hook_dimension(&label.positive)
        * hook_dimension(&label.negative)
}

/// Full character table of W_n: rows are irreducibles, columns conjugacy
/// classes, both in the canonical label order (for these groups the two
/// label sets coincide).
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    kind: GroupKind,
    classes: Vec<ConjugacyClassDatum>,
    labels: Vec<DoublePartition>,
    index: HashMap<DoublePartition, usize>,
    values: Vec<Vec<Integer>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Irreducible labels, in row order.
    pub fn labels(&self) -> &[DoublePartition] {
        &self.labels
    }

    /// Conjugacy classes with centralizer orders and sizes, in column
    /// order.
    pub fn classes(&self) -> &[ConjugacyClassDatum] {
        &self.classes
    }

    /// χ_row(column).
    pub fn value(&self, row: usize, col: usize) -> &Integer {
        &self.values[row][col]
    }

    pub fn label_index(&self, label: &DoublePartition) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// χ_label(class), by label lookup.
    pub fn value_by_label(
        &self,
        label: &DoublePartition,
        class: &DoublePartition,
    ) -> Result<&Integer> {
        let row = self
            .label_index(label)
            .ok_or_else(|| Error::Validation(format!("unknown irreducible label {label}")))?;
        let col = self
            .label_index(class)
            .ok_or_else(|| Error::Validation(format!("unknown class label {class}")))?;
        Ok(self.value(row, col))
    }

    /// Dimension of the irreducible with the given label (its value on the
    /// identity class).
    pub fn dimension(&self, label: &DoublePartition) -> Result<&Integer> {
        self.value_by_label(label, &DoublePartition::identity(self.n))
    }

    /// Rebuilds a table from a persisted value matrix. Labels, classes,
    /// and their order are canonical, so only the values travel; the
    /// matrix must be square over the canonical labels and reproduce the
    /// group order as the sum of squared dimensions (a cheap corruption
    /// check).
    pub(crate) fn from_parts(
        n: usize,
        kind: GroupKind,
        values: Vec<Vec<Integer>>,
    ) -> Result<CharacterTable> {
        let classes = conjugacy_classes(n, kind);
        let labels: Vec<DoublePartition> = classes.iter().map(|c| c.label.clone()).collect();
        if values.len() != labels.len() || values.iter().any(|row| row.len() != classes.len()) {
            return Err(Error::SizeMismatch(format!(
                "value matrix shape does not match the {} canonical labels",
                labels.len()
            )));
        }
        let identity = labels
            .iter()
            .position(|l| *l == DoublePartition::identity(n))
            .expect("identity class is always present");
        let squares: Integer = values.iter().map(|row| &row[identity] * &row[identity]).sum();
        if squares != group_order(n, kind) {
            return Err(Error::InternalConsistency(format!(
                "dimension check failed for persisted table: sum of squares {squares} != |W|"
            )));
        }
        let trivial = labels
            .iter()
            .position(|l| l.negative.is_empty() && l.positive.num_parts() <= 1)
            .expect("trivial label is always present");
        if values[trivial].iter().any(|v| !v.is_one()) {
            return Err(Error::InternalConsistency(
                "trivial-character row of persisted table is not constant 1".into(),
            ));
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(CharacterTable {
            n,
            kind,
            classes,
            labels,
            index,
            values,
        })
    }
}

/// Largest n for which a hyperoctahedral character table will be built.
pub const MAX_TABLE_N_BC: usize = 10;
/// Largest n for which a symmetric-group character table will be built.
pub const MAX_TABLE_N_A: usize = 14;

type TableSlot = Arc<OnceLock<Arc<CharacterTable>>>;

fn table_cache() -> &'static Mutex<HashMap<(usize, GroupKind), TableSlot>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, GroupKind), TableSlot>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The character table of W_n, built once per (n, kind) and shared.
///
/// Tables grow quickly; ranks beyond [`MAX_TABLE_N_BC`] / [`MAX_TABLE_N_A`]
/// are refused with [`Error::BudgetExceeded`].
pub fn character_table(n: usize, kind: GroupKind) -> Result<Arc<CharacterTable>> {
    let cap = match kind {
        GroupKind::Bc => MAX_TABLE_N_BC,
        GroupKind::A => MAX_TABLE_N_A,
    };
    if n > cap {
        return Err(Error::BudgetExceeded {
            required: format!("character table of rank {n} (kind {kind})"),
            cap: cap as u64,
        });
    }
    let slot = {
        let mut map = table_cache().lock().expect("table cache poisoned");
        map.entry((n, kind)).or_default().clone()
    };
    Ok(slot.get_or_init(|| Arc::new(build_table(n, kind))).clone())
}

fn build_table(n: usize, kind: GroupKind) -> CharacterTable {
    let classes = conjugacy_classes(n, kind);
    let labels: Vec<DoublePartition> = classes.iter().map(|c| c.label.clone()).collect();
    let index: HashMap<DoublePartition, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let values = match kind {
        GroupKind::A => labels
            .par_iter()
            .map(|label| {
                classes
                    .iter()
                    .map(|c| {
                        sn_character(&label.positive, &c.label.positive).expect("sizes match")
                    })
                    .collect()
            })
            .collect(),
        GroupKind::Bc => {
            // Symmetric-group values for every block size, shared by all rows.
            let sn_maps: Vec<HashMap<(Partition, Partition), Integer>> = (0..=n)
                .map(|k| {
                    let mut map = HashMap::new();
                    for lam in partitions(k) {
                        for mu in partitions(k) {
                            let v = sn_character(&lam, &mu).expect("sizes match");
                            map.insert((lam.clone(), mu), v);
                        }
                    }
                    map
                })
                .collect();
            labels
                .par_iter()
                .map(|label| {
                    let k = label.positive.size();
                    let chi1 = |c: &DoublePartition| {
                        sn_maps[k][&(label.positive.clone(), c.merged())].clone()
                    };
                    let chi2 = |c: &DoublePartition| {
                        delta_value(c)
                            * sn_maps[n - k][&(label.negative.clone(), c.merged())].clone()
                    };
                    classes
                        .iter()
                        .map(|c| induced_product_value(&chi1, k, &chi2, &c.label))
                        .collect()
                })
                .collect()
        }
    };
    CharacterTable {
        n,
        kind,
        classes,
        labels,
        index,
        values,
    }
}

/// The character polynomial of the induced representation
/// Ind_{B_a × B_{n−a}}^{B_n}(V_label ⊠ 1), valid in every rank n ≥ a at
/// once (a = |label|): each basis element indexed by a class (α, β) of B_a
/// appears with coefficient χ_label(α, β).
pub fn padded_irreducible_charpoly(label: &DoublePartition) -> Result<CharacterPolynomial> {
    let a = label.total();
    let table = character_table(a, GroupKind::Bc)?;
    let row = table
        .label_index(label)
        .ok_or_else(|| Error::Validation(format!("unknown irreducible label {label}")))?;
    let mut poly = CharacterPolynomial::zero();
    for (j, class) in table.classes().iter().enumerate() {
        let v = Rational::from_integer(table.value(row, j).clone());
        poly = poly.add(&CharacterPolynomial::basis_term(class.label.clone()).scale(&v));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::double_partitions;
    use crate::rational::int;
    use crate::weyl::{enumerate_group, group_order, SignedPermutation};

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn dp(s: &str) -> DoublePartition {
        DoublePartition::parse(s).unwrap()
    }

    #[test]
    fn murnaghan_nakayama_small_values() {
        // Sign character: value on a 3-cycle is +1.
        assert_eq!(sn_character(&part("(1,1,1)"), &part("(3)")).unwrap(), int(1));
        // Standard rep of S_3 (shape (2,1)).
        assert_eq!(sn_character(&part("(2,1)"), &part("(3)")).unwrap(), int(-1));
        assert_eq!(sn_character(&part("(2,1)"), &part("(2,1)")).unwrap(), int(0));
        assert_eq!(sn_character(&part("(2,1)"), &part("(1,1,1)")).unwrap(), int(2));
        // Empty group.
        assert_eq!(sn_character(&part("()"), &part("()")).unwrap(), int(1));
        assert!(sn_character(&part("(2)"), &part("(3)")).is_err());
    }

    #[test]
    fn identity_column_matches_hook_formula_up_to_8() {
        for n in 0..=8usize {
            let identity = Partition::new(vec![1; n]).unwrap();
            for lam in partitions(n) {
                assert_eq!(
                    sn_character(&lam, &identity).unwrap(),
                    hook_dimension(&lam),
                    "shape {lam}"
                );
            }
        }
    }

    #[test]
    fn frozen_s3_character_table() {
        let t = character_table(3, GroupKind::A).unwrap();
        let order: Vec<String> = t.labels().iter().map(|l| l.render()).collect();
        assert_eq!(order, vec!["(3),()", "(2,1),()", "(1,1,1),()"]);
        let expect = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(t.value(i, j), &int(*v), "({i},{j})");
            }
        }
    }

    #[test]
    fn frozen_b2_character_table() {
        let t = character_table(2, GroupKind::Bc).unwrap();
        let order: Vec<String> = t.labels().iter().map(|l| l.render()).collect();
        assert_eq!(
            order,
            vec!["(2),()", "(1,1),()", "(1),(1)", "(),(2)", "(),(1,1)"]
        );
        let expect = [
            [1, 1, 1, 1, 1],
            [-1, 1, 1, -1, 1],
            [0, 2, 0, 0, -2],
            [1, 1, -1, -1, 1],
            [-1, 1, -1, 1, 1],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(t.value(i, j), &int(*v), "({i},{j})");
            }
        }
    }

    #[test]
    fn orthogonality_and_dimension_sums() {
        for (kind, n_max) in [(GroupKind::Bc, 3), (GroupKind::A, 4)] {
            for n in 0..=n_max {
                let t = character_table(n, kind).unwrap();
                let order = group_order(n, kind);
                let m = t.labels().len();
                // Row orthogonality: Σ_C |C|·χ_i(C)·χ_j(C) = δ_ij·|W|.
                for i in 0..m {
                    for j in 0..m {
                        let mut acc = Integer::zero();
                        for (c, datum) in t.classes().iter().enumerate() {
                            acc += &datum.size * t.value(i, c) * t.value(j, c);
                        }
                        let expect = if i == j { order.clone() } else { Integer::zero() };
                        assert_eq!(acc, expect, "rows {i},{j} n={n} kind={kind}");
                    }
                }
                // Σ dim² = |W|.
                let id = DoublePartition::identity(n);
                let id_col = t.label_index(&id).unwrap();
                let dim_sq: Integer = (0..m).map(|i| t.value(i, id_col).pow(2)).sum();
                assert_eq!(dim_sq, order, "n={n} kind={kind}");
            }
        }
    }

    #[test]
    fn dimensions_match_binomial_hook_product() {
        let t = character_table(4, GroupKind::Bc).unwrap();
        for label in t.labels() {
            assert_eq!(t.dimension(label).unwrap(), &bn_dimension(label), "{label}");
        }
        // A named value: V_((1),(1)) in B_2 is the 2-dimensional reflection
        // representation's companion.
        assert_eq!(bn_dimension(&dp("(1),(1)")), int(2));
        assert_eq!(bn_dimension(&dp("(2,1),(1,1)")), int(20));
    }

    #[test]
    fn direct_irreducible_values_agree_with_tables() {
        for n in 0..=4usize {
            let t = character_table(n, GroupKind::Bc).unwrap();
            for (i, label) in t.labels().iter().enumerate() {
                for (j, class) in t.classes().iter().enumerate() {
                    assert_eq!(
                        &bn_irreducible_value(label, &class.label).unwrap(),
                        t.value(i, j),
                        "{label} at {}",
                        class.label
                    );
                }
            }
        }
    }

    /// Restriction of a block-preserving signed permutation to the first k
    /// letters and the last m letters.
    fn split_blocks(g: &SignedPermutation, k: usize) -> Option<(SignedPermutation, SignedPermutation)> {
        let images = g.images();
        if images[..k].iter().any(|v| v.unsigned_abs() as usize > k) {
            return None;
        }
        let top = SignedPermutation::new(images[..k].to_vec()).unwrap();
        let bottom_images: Vec<i64> = images[k..]
            .iter()
            .map(|&v| if v > 0 { v - k as i64 } else { v + k as i64 })
            .collect();
        let bottom = SignedPermutation::new(bottom_images).unwrap();
        Some((top, bottom))
    }

    /// Induced characters computed by explicitly averaging over the big
    /// group must match the class-splitting formula.
    #[test]
    fn induction_matches_coset_average_up_to_rank_3() {
        for k in 0..=3usize {
            for m in 0..=(3 - k) {
                let n = k + m;
                let sub_order = group_order(k, GroupKind::Bc) * group_order(m, GroupKind::Bc);
                let top_table = character_table(k, GroupKind::Bc).unwrap();
                let bottom_table = character_table(m, GroupKind::Bc).unwrap();
                let elements = enumerate_group(n, GroupKind::Bc, None).unwrap();
                for l1 in top_table.labels() {
                    for l2 in bottom_table.labels() {
                        let chi1 = |c: &DoublePartition| {
                            bn_irreducible_value(l1, c).unwrap()
                        };
                        let chi2 = |c: &DoublePartition| {
                            bn_irreducible_value(l2, c).unwrap()
                        };
                        for class in conjugacy_classes(n, GroupKind::Bc) {
                            let g = elements
                                .iter()
                                .find(|e| e.signed_cycle_type() == class.label)
                                .unwrap();
                            // χ_Ind(g) = (1/|H|) Σ_{x∈G} φ(x g x⁻¹), φ = 0 off H.
                            let mut acc = Integer::zero();
                            for x in &elements {
                                let conj =
                                    x.compose(g).unwrap().compose(&x.inverse()).unwrap();
                                if let Some((top, bottom)) = split_blocks(&conj, k) {
                                    acc += chi1(&top.signed_cycle_type())
                                        * chi2(&bottom.signed_cycle_type());
                                }
                            }
                            assert_eq!(
                                Rational::from_integer(acc)
                                    / Rational::from_integer(sub_order.clone()),
                                Rational::from_integer(induced_product_value(
                                    &chi1,
                                    k,
                                    &chi2,
                                    &class.label
                                )),
                                "k={k} m={m} labels {l1},{l2} class {}",
                                class.label
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn padded_polynomials_small_labels() {
        assert_eq!(padded_irreducible_charpoly(&dp("(),()")).unwrap().render(), "1");
        assert_eq!(padded_irreducible_charpoly(&dp("(1),()")).unwrap().render(), "X1 + Y1");
        assert_eq!(padded_irreducible_charpoly(&dp("(),(1)")).unwrap().render(), "X1 - Y1");
        assert_eq!(
            padded_irreducible_charpoly(&dp("(1),(1)")).unwrap().render(),
            "2*C(X1,2) - 2*C(Y1,2)"
        );
    }

    #[test]
    fn padded_polynomial_evaluates_as_induction_with_trivial_complement() {
        // For n > a, the padded polynomial of a label of size a evaluates
        // on B_n classes to the induced character Ind(V_label ⊠ 1).
        for label_lit in ["(2),()", "(1),(1)", "(),(2)", "(1,1),()"] {
            let label = dp(label_lit);
            let poly = padded_irreducible_charpoly(&label).unwrap();
            let a = label.total();
            for n in a + 1..=a + 2 {
                let chi1 = |c: &DoublePartition| bn_irreducible_value(&label, c).unwrap();
                let chi2 = |_c: &DoublePartition| Integer::one();
                for class in double_partitions(n) {
                    let direct = induced_product_value(&chi1, a, &chi2, &class);
                    assert_eq!(
                        poly.evaluate(&class),
                        Rational::from_integer(direct),
                        "{label_lit} at {class}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            character_table(11, GroupKind::Bc),
            Err(Error::BudgetExceeded { cap: 10, .. })
        ));
        assert!(matches!(
            character_table(15, GroupKind::A),
            Err(Error::BudgetExceeded { cap: 14, .. })
        ));
    }
}
