//! Exact character tables of hyperoctahedral and symmetric groups.
//!
//! Irreducibles of B_n are labelled by ordered pairs of partitions
//! (λ, μ) with |λ| + |μ| = n; the character is induced from the tensor
//! product of a symmetric-group character pulled back along the
//! projection with a sign-twisted copy. All values are exact integers.
//!
//! Run with: cargo run --example character_table

use weyltori::characters::{bn_dimension, character_table};
use weyltori::rational::Integer;
use weyltori::report::{character_table_table, OutputFormat};
use weyltori::weyl::{group_order, GroupKind};

fn main() -> weyltori::Result<()> {
    let table = character_table(2, GroupKind::Bc)?;
    println!(
        "{}",
        character_table_table(&table).render(OutputFormat::Markdown)?
    );

    // Column orthogonality at the identity: Σ (dim χ)² = |W|.
    let b4 = character_table(4, GroupKind::Bc)?;
    let mut sum = Integer::from(0u32);
    println!("dimensions of the {} irreducibles of B_4:", b4.labels().len());
    for label in b4.labels() {
        let dim = b4.dimension(label)?;
        assert_eq!(dim, &bn_dimension(label));
        println!("  dim V{label} = {dim}");
        sum += dim * dim;
    }
    println!(
        "Σ dim² = {sum} = |B_4| = {}",
        group_order(4, GroupKind::Bc)
    );
    Ok(())
}
