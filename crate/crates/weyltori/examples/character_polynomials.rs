//! Character polynomials: one expression, every rank at once.
//!
//! X_r and Y_r count the positive and negative r-cycles of a signed
//! permutation, so a polynomial in them defines a class function on B_n
//! simultaneously for all n. Products expand back into the binomial
//! basis C(X_1, 2)·Y_3⋯ with rational coefficients, and averages over
//! B_n become independent of n once n reaches the degree.
//!
//! Run with: cargo run --example character_polynomials

use weyltori::charpoly::CharacterPolynomial;
use weyltori::partitions::DoublePartition;
use weyltori::rational::render_rational;
use weyltori::weyl::GroupKind;

fn main() -> weyltori::Result<()> {
    // Parsing and canonical rendering.
    let p = CharacterPolynomial::parse("C(X1+Y1,2) - (X2+Y2)")?;
    println!("P  = {}", p.render());

    // Products re-expand in the binomial basis: X1·X1 = 2·C(X1,2) + X1.
    let x1 = CharacterPolynomial::x_var(1)?;
    println!("X1·X1 = {}", x1.mul(&x1).render());

    // Evaluation is purely combinatorial: count cycles of the class.
    for class in ["(2,1),(1)", "(1,1),(2)", "(),(2,2)"] {
        let label = DoublePartition::parse(class)?;
        println!(
            "P on a {class} element: {}",
            render_rational(&p.evaluate(&label))
        );
    }

    // Averages over B_n stabilize at n = deg P and match the closed form.
    let q = CharacterPolynomial::parse("X1*X1")?;
    for n in 1..=4 {
        println!(
            "⟨X1·X1⟩ over B_{n} = {}",
            render_rational(&q.inner_product(&CharacterPolynomial::one(), n, GroupKind::Bc))
        );
    }
    println!(
        "stable mean      = {}",
        render_rational(&q.stable_inner_product_with_one(GroupKind::Bc))
    );
    Ok(())
}
