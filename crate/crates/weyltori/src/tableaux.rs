//! Double standard tableaux and the flag major index.
//!
//! A double standard tableau of shape (λ, μ) with |λ| + |μ| = n is a
//! filling of the two Young diagrams by 1, …, n (each used once) that is
//! row- and column-increasing in each diagram. Stacking the μ-diagram
//! above the λ-diagram gives each entry a combined row number; the flag
//! descent set collects the entries j whose successor j+1 sits in a
//! strictly lower (larger-numbered) combined row, and the flag major index
//! is
//!
//! ```text
//!   f(T) = 2·Σ_{j ∈ D(T)} j + |μ|.
//! ```
//!
//! The number of double standard tableaux of shape (λ, μ) with f(T) = d
//! equals the multiplicity of the irreducible V_(λ,μ) in degree d of the
//! hyperoctahedral coinvariant algebra; `coinvariant` cross-checks this
//! against Molien series.

use crate::characters::bn_dimension;
use crate::error::{Error, Result};
use crate::partitions::DoublePartition;
use crate::rational::{Integer, Rational};
use crate::series::GradedSeries;

/// A standard filling of a pair of diagrams: `negative_rows[i]` /
/// `positive_rows[i]` hold the entries of row i, increasing left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleTableau {
    negative_rows: Vec<Vec<usize>>,
    positive_rows: Vec<Vec<usize>>,
}

impl DoubleTableau {
    pub fn negative_rows(&self) -> &[Vec<usize>] {
        &self.negative_rows
    }

    pub fn positive_rows(&self) -> &[Vec<usize>] {
        &self.positive_rows
    }

    /// Total number of entries.
    pub fn size(&self) -> usize {
        self.negative_rows.iter().map(Vec::len).sum::<usize>()
            + self.positive_rows.iter().map(Vec::len).sum::<usize>()
    }

    /// Combined row number of each entry (index j−1 holds entry j): rows of
    /// the negative diagram come first, then rows of the positive diagram.
    fn combined_rows(&self) -> Vec<usize> {
        let n = self.size();
        let mut rows = vec![0usize; n];
        for (i, row) in self.negative_rows.iter().enumerate() {
            for &e in row {
                rows[e - 1] = i;
            }
        }
        let offset = self.negative_rows.len();
        for (i, row) in self.positive_rows.iter().enumerate() {
            for &e in row {
                rows[e - 1] = offset + i;
            }
        }
        rows
    }

    /// Entries j such that j+1 lies in a strictly larger combined row.
    pub fn flag_descent_set(&self) -> Vec<usize> {
        let rows = self.combined_rows();
        (1..rows.len())
            .filter(|&j| rows[j] > rows[j - 1])
            .collect()
    }

    /// 2·(sum of flag descents) + (size of the negative shape).
    pub fn flag_major_index(&self) -> usize {
        let neg_size: usize = self.negative_rows.iter().map(Vec::len).sum();
        2 * self.flag_descent_set().iter().sum::<usize>() + neg_size
    }
}

impl std::fmt::Display for DoubleTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let render = |rows: &[Vec<usize>]| {
            if rows.is_empty() {
                return "∅".to_string();
            }
            rows.iter()
                .map(|r| {
                    format!(
                        "[{}]",
                        r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
                    )
                })
                .collect::<Vec<_>>()
                .join("")
        };
        write!(
            f,
            "neg {} | pos {}",
            render(&self.negative_rows),
            render(&self.positive_rows)
        )
    }
}

/// Ceiling on how many tableaux [`double_standard_tableaux`] will
/// enumerate; checked in advance with the hook-length formula.
pub const MAX_TABLEAU_ENUMERATION: u64 = 1_000_000;

/// All double standard tableaux of the given shape, in a deterministic
/// order. Fails with [`Error::BudgetExceeded`] when the count (known in
/// closed form beforehand) exceeds [`MAX_TABLEAU_ENUMERATION`].
pub fn double_standard_tableaux(label: &DoublePartition) -> Result<Vec<DoubleTableau>> {
    let count = bn_dimension(label);
    if count > Integer::from(MAX_TABLEAU_ENUMERATION) {
        return Err(Error::BudgetExceeded {
            required: format!("enumeration of {count} tableaux of shape {label}"),
            cap: MAX_TABLEAU_ENUMERATION,
        });
    }
    let n = label.total();
    let mut neg_shape: Vec<usize> = label.negative.parts().to_vec();
    let mut pos_shape: Vec<usize> = label.positive.parts().to_vec();
    // assignments[v-1] = (is_negative, row) for entry v.
    let mut assignments: Vec<(bool, usize)> = vec![(false, 0); n];
    let mut out = Vec::new();
    remove_corners(n, &mut neg_shape, &mut pos_shape, &mut assignments, &mut out, label);
    Ok(out)
}

/// Depth-first removal of the largest remaining entry from every removable
/// corner of either diagram.
fn remove_corners(
    v: usize,
    neg: &mut Vec<usize>,
    pos: &mut Vec<usize>,
    assignments: &mut Vec<(bool, usize)>,
    out: &mut Vec<DoubleTableau>,
    label: &DoublePartition,
) {
    if v == 0 {
        let build = |shape_rows: usize, side: bool| {
            let mut rows = vec![Vec::new(); shape_rows];
            for (e, &(is_neg, r)) in assignments.iter().enumerate() {
                if is_neg == side {
                    rows[r].push(e + 1);
                }
            }
            rows
        };
        out.push(DoubleTableau {
            negative_rows: build(label.negative.num_parts(), true),
            positive_rows: build(label.positive.num_parts(), false),
        });
        return;
    }
    for side in [true, false] {
        let rows = if side { neg.len() } else { pos.len() };
        for i in 0..rows {
            let removable = {
                let shape: &[usize] = if side { neg } else { pos };
                shape[i] > 0 && (i + 1 == shape.len() || shape[i] > shape[i + 1])
            };
            if !removable {
                continue;
            }
            if side {
                neg[i] -= 1;
            } else {
                pos[i] -= 1;
            }
            assignments[v - 1] = (side, i);
            remove_corners(v - 1, neg, pos, assignments, out, label);
            if side {
                neg[i] += 1;
            } else {
                pos[i] += 1;
            }
        }
    }
}

/// Generating series Σ_T t^{f(T)} over the double standard tableaux of the
/// given shape: coefficient of t^d is the multiplicity of V_label in
/// degree d of the coinvariant algebra.
pub fn flag_major_generating_series(label: &DoublePartition) -> Result<GradedSeries> {
    let tableaux = double_standard_tableaux(label)?;
    let dmax = tableaux
        .iter()
        .map(DoubleTableau::flag_major_index)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rational::from_integer(0.into()); dmax + 1];
    for t in &tableaux {
        coeffs[t.flag_major_index()] += Rational::from_integer(1.into());
    }
    Ok(GradedSeries::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::double_partitions;
    use crate::rational::rat;

    fn dp(s: &str) -> DoublePartition {
        DoublePartition::parse(s).unwrap()
    }

    fn f_multiset(label: &str) -> Vec<usize> {
        let mut v: Vec<usize> = double_standard_tableaux(&dp(label))
            .unwrap()
            .iter()
            .map(DoubleTableau::flag_major_index)
            .collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn counts_match_closed_form_dimension() {
        for n in 0..=5usize {
            for label in double_partitions(n) {
                let count = double_standard_tableaux(&label).unwrap().len();
                assert_eq!(
                    Integer::from(count as u64),
                    bn_dimension(&label),
                    "{label}"
                );
            }
        }
    }

    #[test]
    fn trivial_shape_has_single_tableau_in_degree_zero() {
        assert_eq!(
            flag_major_generating_series(&dp("(),()")).unwrap(),
            GradedSeries::one()
        );
        for n in 1..=5usize {
            let label = dp(&format!("({n}),()"));
            let series = flag_major_generating_series(&label).unwrap();
            assert_eq!(series, GradedSeries::one(), "n={n}");
        }
    }

    #[test]
    fn single_negative_column_lands_in_top_degree() {
        // Shape (∅, (1^n)): one tableau, all descents, f = n².
        for n in 1..=4usize {
            let label = DoublePartition::parse(&format!(
                "(),({})",
                vec!["1"; n].join(",")
            ))
            .unwrap();
            let tableaux = double_standard_tableaux(&label).unwrap();
            assert_eq!(tableaux.len(), 1);
            assert_eq!(tableaux[0].flag_major_index(), n * n, "n={n}");
        }
    }

    #[test]
    fn frozen_flag_major_multisets() {
        assert_eq!(f_multiset("(1,1),()"), vec![2]);
        assert_eq!(f_multiset("(2,1),()"), vec![2, 4]);
        assert_eq!(f_multiset("(1,1,1),()"), vec![6]);
        assert_eq!(f_multiset("(3,1),()"), vec![2, 4, 6]);
        assert_eq!(f_multiset("(2,1,1),()"), vec![6, 8, 10]);
        assert_eq!(f_multiset("(),(1,1)"), vec![4]);
        assert_eq!(f_multiset("(1),(1,1)"), vec![4, 6, 8]);
        assert_eq!(f_multiset("(),(2)"), vec![2]);
        assert_eq!(f_multiset("(1),(2)"), vec![2, 4, 6]);
        assert_eq!(f_multiset("(2),(1)"), vec![1, 3, 5]);
    }

    #[test]
    fn descent_sets_on_an_explicit_shape() {
        // Shape ((1), (2)) at n = 3: the positive entry p determines the
        // tableau. With the negative row on top, the only possible descent
        // is at p − 1 (the step down into the positive box), so
        // D = ∅ for p = 1 and D = {p − 1} otherwise; f = 2·Σ D + 2.
        let tableaux = double_standard_tableaux(&dp("(1),(2)")).unwrap();
        assert_eq!(tableaux.len(), 3);
        for t in &tableaux {
            let p = t.positive_rows()[0][0];
            let expect: Vec<usize> = if p == 1 { vec![] } else { vec![p - 1] };
            assert_eq!(t.flag_descent_set(), expect, "{t}");
        }
        let mut fs: Vec<(usize, usize)> = tableaux
            .iter()
            .map(|t| (t.positive_rows()[0][0], t.flag_major_index()))
            .collect();
        fs.sort_unstable();
        assert_eq!(fs, vec![(1, 2), (2, 4), (3, 6)]);
    }

    #[test]
    fn generating_series_total_is_the_dimension() {
        for label in ["(2,1),(1)", "(1),(2,1)", "(2),(2)"] {
            let label = dp(label);
            let series = flag_major_generating_series(&label).unwrap();
            assert_eq!(
                series.eval_at_one(),
                Rational::from_integer(bn_dimension(&label)),
                "{label}"
            );
        }
    }

    #[test]
    fn enumeration_budget() {
        // Shape ((1^12), (1^12)) has C(24,12)·1·1 ≈ 2.7M tableaux.
        let label = DoublePartition::new(
            crate::partitions::Partition::new(vec![1; 12]).unwrap(),
            crate::partitions::Partition::new(vec![1; 12]).unwrap(),
        );
        assert!(matches!(
            double_standard_tableaux(&label),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn degree_two_multiplicities_across_b2() {
        // Degree-2 coefficients over all shapes of B_2 in canonical order.
        let got: Vec<Rational> = double_partitions(2)
            .map(|l| flag_major_generating_series(&l).unwrap().coefficient(2))
            .collect();
        assert_eq!(got, vec![rat(0), rat(1), rat(0), rat(1), rat(0)]);
    }
}
