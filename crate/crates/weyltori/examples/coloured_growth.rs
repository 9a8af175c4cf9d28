//! Coloured partitions: counting, enumeration, and subexponential growth.
//!
//! T(N, C) counts partitions of N whose parts each carry a multiset of C
//! colours; its generating function is a product of (1 - x^k) raised to
//! negative binomial powers. The count grows like exp(N^(2/3+o(1))) for
//! fixed C, so log2 T(N) / N must eventually decrease. This example
//! computes counts, cross-checks small values against explicit
//! enumeration, and probes the monotone decay of the log-ratios.
//!
//! Run with: cargo run --example coloured_growth

use weyltori::coloured::{
    count_coloured_partitions, enumerate_coloured_partitions, subexponential_probe,
};
use weyltori::rational::render_rational;

fn main() -> weyltori::Result<()> {
    // Small table of T(N, C).
    println!("      C=1   C=2    C=3");
    for n in 0..=8 {
        println!(
            "N={n}  {:>4} {:>5} {:>6}",
            count_coloured_partitions(n, 1),
            count_coloured_partitions(n, 2),
            count_coloured_partitions(n, 3)
        );
    }

    // The 14 two-coloured partitions of 3, written out.
    let all = enumerate_coloured_partitions(3, 2)?;
    println!("\nT(3,2) = {} objects:", all.len());
    for cp in &all {
        let blocks: Vec<String> = cp
            .blocks()
            .iter()
            .map(|b| format!("{:?}", b))
            .collect();
        println!("  part sizes coloured as {}", blocks.join(" | "));
    }

    // Growth probe: exact big-integer comparisons certify where the
    // ratio log2 T(N) / N starts decreasing monotonically.
    let probe = subexponential_probe(1, 40);
    println!(
        "\nsingle-colour ratios decrease from N = {:?} onward",
        probe.decreasing_from
    );
    for n in [5, 6, 10, 20, 40] {
        println!(
            "  log2 T({n},1)/{n} ~ {}",
            render_rational(&probe.ratios[n])
        );
    }
    Ok(())
}
