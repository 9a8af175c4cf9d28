//! A stable series in 1/q that diverges: invariants of the edge algebra.
//!
//! For the permutation action of S_n on the polynomial ring generated by
//! the variables x_ij (i < j), the degree-d invariant dimension
//! stabilizes, for n >= 2d, at the number of loopless multigraphs with d
//! edges. That sequence grows super-exponentially, so the would-be limit
//! series Σ c_d / q^d has radius of convergence zero: its partial sums
//! at any fixed q grow without bound instead of approaching a limit.
//!
//! Run with: cargo run --example divergence

use num::BigInt as Integer;
use weyltori::coloured::divergence_demo;
use weyltori::rational::render_rational;

fn main() -> weyltori::Result<()> {
    let report = divergence_demo(10, &Integer::from(2))?;
    println!("stable invariant dimensions c_d and partial sums of Σ c_d/2^d:");
    println!("  d   c_d        c_d/2^d          partial sum");
    for entry in &report.entries {
        println!(
            "  {:>2}  {:<9} {:<16} {}",
            entry.d,
            entry.coefficient,
            render_rational(&entry.term),
            render_rational(&entry.partial_sum)
        );
    }
    println!(
        "\nterms strictly increasing:        {}",
        report.terms_strictly_increasing
    );
    println!(
        "partial sums strictly increasing: {}",
        report.partial_sums_strictly_increasing
    );
    println!("no plateau forms; the series has no limit at any fixed q.");
    Ok(())
}
