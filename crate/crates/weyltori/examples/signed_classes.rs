//! Signed permutations and their conjugacy classes.
//!
//! Elements of the hyperoctahedral group B_n are permutations σ of
//! {±1..±n} with σ(−i) = −σ(i), written in window notation
//! [σ(1), …, σ(n)]. Conjugacy classes are labelled by pairs of
//! partitions: cycle lengths whose product of signs is positive on one
//! side, negative on the other.
//!
//! Run with: cargo run --example signed_classes

use weyltori::report::{classes_table, OutputFormat};
use weyltori::weyl::{enumerate_group, group_order, GroupKind, SignedPermutation};

fn main() -> weyltori::Result<()> {
    // Window notation and composition.
    let s = SignedPermutation::new(vec![-3, 1, -2])?;
    let t = SignedPermutation::new(vec![2, -1, 3])?;
    println!("s           = {s}");
    println!("t           = {t}");
    println!("s ∘ t       = {}", s.compose(&t)?);
    println!("s⁻¹         = {}", s.inverse());
    println!("type of s   = {}", s.signed_cycle_type());
    println!("type of s⁻¹ = {}", s.inverse().signed_cycle_type());
    println!();

    // Class data for B_3: sizes always sum to |B_3| = 48.
    println!(
        "{}",
        classes_table(3, GroupKind::Bc).render(OutputFormat::Markdown)?
    );
    println!("|B_3| = {}", group_order(3, GroupKind::Bc));

    // Brute-force check: bucket all 48 elements by cycle type.
    let mut by_type = std::collections::BTreeMap::new();
    for g in enumerate_group(3, GroupKind::Bc, None)? {
        *by_type.entry(g.signed_cycle_type()).or_insert(0usize) += 1;
    }
    println!("\ndirect enumeration finds {} classes:", by_type.len());
    for (label, count) in by_type {
        println!("  {label}: {count} elements");
    }
    Ok(())
}
