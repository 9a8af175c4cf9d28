//! Graded multiplicities in the coinvariant algebra, two independent ways.
//!
//! The coinvariant algebra of B_n is a graded version of the regular
//! representation: each irreducible indexed by a double partition shows
//! up in degree d with a multiplicity. This example computes those
//! multiplicities by Molien-style character averaging and then again by
//! counting standard double tableaux weighted by the flag major index,
//! and checks the two routes agree.
//!
//! Run with: cargo run --example graded_multiplicities

use weyltori::coinvariant::{multiplicity_series, top_degree, GradedMultiplicityTable};
use weyltori::partitions::DoublePartition;
use weyltori::tableaux::{double_standard_tableaux, flag_major_generating_series};
use weyltori::weyl::GroupKind;

fn main() -> weyltori::Result<()> {
    let label = DoublePartition::parse("(2),(1)")?;
    let n = label.total();
    let dmax = top_degree(n, GroupKind::Bc);

    // Route 1: average characters against the Molien series of the
    // graded polynomial ring, degree by degree.
    let molien = multiplicity_series(&label)?;

    // Route 2: generating function of the flag major index over
    // standard double tableaux of the same shape.
    let tableaux = double_standard_tableaux(&label)?;
    let fmaj = flag_major_generating_series(&label)?;

    println!(
        "shape {}  ({} standard double tableaux, coinvariant top degree {dmax})",
        label.render(),
        tableaux.len()
    );
    for t in &tableaux {
        println!(
            "  tableau with flag descent set {:?} has flag major index {}",
            t.flag_descent_set(),
            t.flag_major_index()
        );
    }
    println!("Molien route : {}", molien.pretty("t"));
    println!("tableau route: {}", fmaj.pretty("t"));
    assert_eq!(molien, fmaj);

    // The full table at n = 3: rows are irreducibles, and the entries in
    // each column resolve the coinvariant algebra degree by degree.
    let table = GradedMultiplicityTable::compute(3, GroupKind::Bc)?;
    table.verify_dimension_identity()?;
    println!("\nB_3 coinvariant algebra, all {} irreducibles:", table.labels().len());
    for label in table.labels() {
        println!("  {:<12} {}", label.render(), table.series(label)?.pretty("t"));
    }
    Ok(())
}
