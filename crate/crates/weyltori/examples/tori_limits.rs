//! Large-rank limits of torus statistics as series in 1/q.
//!
//! For a fixed character polynomial P the normalized expectation over
//! rank-n tori converges coefficientwise, as a power series in x = 1/q,
//! to a limit independent of n. Each coefficient is computed at a probe
//! rank and confirmed at the next one, so a failure of stabilization
//! cannot pass silently.
//!
//! Run with: cargo run --example tori_limits

use num::{BigInt as Integer, Zero};
use weyltori::charpoly::CharacterPolynomial;
use weyltori::rational::render_rational;
use weyltori::report::{limit_table, OutputFormat};
use weyltori::tori::{expectation, stable_limit_series};

fn main() -> weyltori::Result<()> {
    // X1 + Y1 counts one-dimensional subtori of a fixed kind. Its limit
    // series is 1 + x^2 + x^4 + ... = q^2/(q^2 - 1).
    let p = CharacterPolynomial::parse("X1 + Y1")?;
    let limit = stable_limit_series(&p, 12)?;
    for entry in limit.entries() {
        if !entry.value.is_zero() {
            println!(
                "coefficient of q^-{}: {}  (probed n={}, confirmed)",
                entry.d,
                render_rational(&entry.value),
                entry.probe_n
            );
        }
    }

    // Partial sums at a concrete q approach the limit value from the
    // finite-rank expectations.
    let q = Integer::from(2);
    let sums = limit.partial_sums(&q)?;
    println!("\npartial sums at q=2: {}", render_rational(sums.last().unwrap()));
    for n in [3, 6, 9] {
        println!(
            "exact expectation at rank {n}: {}",
            render_rational(&expectation(&p, n, &q)?)
        );
    }
    println!("limit q^2/(q^2-1) at q=2:    4/3");

    // The report form also notes where the nonzero coefficients start
    // decaying at the chosen q.
    let table = limit_table(&stable_limit_series(&CharacterPolynomial::parse("X2 - Y2")?, 10)?, &q)?;
    println!("\n{}", table.render(OutputFormat::Markdown)?);
    Ok(())
}
