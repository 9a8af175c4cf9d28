//! Counting Frobenius-stable maximal tori, weighted by a statistic.
//!
//! A character polynomial P assigns a number to each torus class; the
//! weighted count of stable maximal tori in the symplectic group of rank
//! n over F_q is an average of P·(characteristic reciprocal factor) over
//! the hyperoctahedral group, times q^(number of roots). This example
//! evaluates totals and normalized expectations exactly and reproduces a
//! table of closed forms.
//!
//! Run with: cargo run --example tori_statistics

use num::BigInt as Integer;
use weyltori::charpoly::CharacterPolynomial;
use weyltori::rational::render_rational;
use weyltori::report::{table1_table, OutputFormat};
use weyltori::tori::{closed_form_table1, lehrer_total, tori_statistic, type_a_statistics};
use weyltori::weyl::GroupKind;

fn main() -> weyltori::Result<()> {
    // P = 1 counts all stable maximal tori: exactly q^(2n^2).
    let one = CharacterPolynomial::one();
    for n in 1..=4 {
        let total = lehrer_total(&one, n, &Integer::from(2))?;
        println!("rank {n}, q=2: {total} stable maximal tori (= 2^{})", 4 * n * n);
    }

    // P = X1 counts tori whose class has a positive fixed point, i.e. the
    // tori containing a split one-dimensional subtorus of a fixed kind.
    let x1 = CharacterPolynomial::parse("X1")?;
    let stat = tori_statistic(&x1, 2, &Integer::from(2), GroupKind::Bc)?;
    println!(
        "\nrank 2, q=2, P=X1: total {}  expectation {}",
        render_rational(&stat.total),
        render_rational(&stat.expectation)
    );

    // Same machinery for the general linear group (type A): the average
    // of X1 over tori of GL_2(F_q) is 1 + 1/q.
    let ga = type_a_statistics(&x1, 2, &Integer::from(3))?;
    println!("GL_2(F_3), P=X1: expectation {}", render_rational(&ga));

    // The five-row summary table: every computed value is checked against
    // its closed form in q before the report is returned.
    let report = closed_form_table1(3, &Integer::from(2))?;
    println!("\n{}", table1_table(&report).render(OutputFormat::Markdown)?);
    Ok(())
}
