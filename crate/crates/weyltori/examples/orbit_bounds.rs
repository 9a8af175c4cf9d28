//! Monomial orbits under a Weyl group action with fixed and moving blocks.
//!
//! Variables split into b fixed scalars, a pinned vector positions, and c
//! colour copies of n moving positions (each contributing a plus/minus
//! pair in types B/C). The group permutes and signs the moving block;
//! orbits of degree-d monomials stabilize once n is at least a + d, and
//! their count obeys a polynomial-times-partition bound. A Molien-series
//! computation of the invariant dimension recovers the same numbers.
//!
//! Run with: cargo run --example orbit_bounds

use weyltori::coloured::{invariant_dimension, monomial_orbit_count};
use weyltori::weyl::GroupKind;

fn main() -> weyltori::Result<()> {
    // Orbit counts against their bound for a sample geometry:
    // a = 1 pinned position, b = 1 fixed scalar, c = 1 colour.
    let (a, b, c) = (1, 1, 1);
    println!("a={a} pinned, b={b} fixed, c={c} colour, type B/C:");
    println!("  d   orbits   bound");
    for d in 0..=8 {
        let report = monomial_orbit_count(a, b, c, d, a + d, GroupKind::Bc)?;
        println!("  {d}  {:>7} {:>7}", report.orbit_count, report.bound);
    }

    // Stability in n: the count at n = a + d is already final.
    let d = 5;
    let at_threshold = monomial_orbit_count(a, b, c, d, a + d, GroupKind::Bc)?;
    let beyond = monomial_orbit_count(a, b, c, d, a + d + 4, GroupKind::Bc)?;
    println!(
        "\nd={d}: count {} at n={}, still {} at n={}",
        at_threshold.orbit_count,
        at_threshold.n,
        beyond.orbit_count,
        beyond.n
    );
    assert_eq!(at_threshold.orbit_count, beyond.orbit_count);

    // Independent route: dimension of the invariant subspace in degree d,
    // computed from the Molien series of the action. Because the group
    // permutes monomials, this equals the orbit count at every n.
    println!("\norbit count vs invariant dimension (type A, a=0, b=2, c=1, n=3):");
    for d in 0..=6 {
        let orbits = monomial_orbit_count(0, 2, 1, d, 3, GroupKind::A)?;
        let dim = invariant_dimension(0, 2, 1, d, 3, GroupKind::A)?;
        println!("  d={d}: {} orbits, invariant dimension {}", orbits.orbit_count, dim);
        assert_eq!(orbits.orbit_count, dim);
    }
    Ok(())
}
