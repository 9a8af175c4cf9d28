//! Stable multiplicities of padded irreducible families.
//!
//! Fix a tail shape and a negative shape, pad the first positive row so
//! the total is n, and watch the degree-d multiplicity in the B_n
//! coinvariant algebra: for each d it becomes independent of n once n is
//! large enough. This example probes the stabilization directly and then
//! prints the stable series for several families.
//!
//! Run with: cargo run --example stable_multiplicities

use weyltori::coinvariant::{
    multiplicity, stable_multiplicity, stable_multiplicity_series, PaddedFamily,
};
use weyltori::rational::render_rational;

fn main() -> weyltori::Result<()> {
    // The family "(n-2),(1,1)": positive part a single padded row,
    // negative part the column (1,1).
    let family = PaddedFamily::parse("(n-2),(1,1)")?;
    println!("family {family}  (defined for n >= {})", family.min_rank());

    // Raw multiplicities at increasing rank: each column freezes.
    println!("\n      d=0 d=1 d=2 d=3 d=4 d=5 d=6 d=7 d=8");
    for n in family.min_rank()..=8 {
        let label = family.label_at(n)?;
        let mut row = format!("n={n}  ");
        for d in 0..=8 {
            row.push_str(&format!("{:>3} ", multiplicity(&label, d)?));
        }
        println!("{row}   (label {})", label.render());
    }

    // stable_multiplicity automates that: it evaluates at a rank past the
    // stabilization threshold and insists the value matches at the next
    // rank before trusting it.
    println!(
        "\nstable multiplicity at d=8: {}",
        stable_multiplicity(&family, 8)?
    );

    // Stable series for a few families, through degree 15.
    println!();
    for name in [
        "(n),()",
        "(n-1),(1)",
        "(n-1,1),()",
        "(n-2),(2)",
        "(n-2),(1,1)",
        "(n-2,1,1),()",
        "(n-2,1),(1)",
    ] {
        let family = PaddedFamily::parse(name)?;
        let series = stable_multiplicity_series(&family, 15)?;
        let coeffs: Vec<String> = (0..=15)
            .map(|d| render_rational(&series.coefficient(d)))
            .collect();
        println!("{:<14} {}", name, coeffs.join(" "));
    }
    Ok(())
}
