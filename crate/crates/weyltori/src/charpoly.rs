//! Character polynomials: class functions defined simultaneously on every
//! symmetric or hyperoctahedral group.
//!
//! A character polynomial is a polynomial in the variables X_1, X_2, …
//! and Y_1, Y_2, …, where on a class of cycle type (α, β) the variable X_r
//! takes the value n_r(α) (the number of positive r-cycles) and Y_r takes
//! n_r(β) (negative r-cycles). Type A classes simply have β = ∅.
//!
//! Internally a polynomial is stored in the binomial basis: the basis
//! element indexed by a pair of partitions (x, y) is
//!
//! ```text
//!   ∏_r C(X_r, n_r(x)) · ∏_r C(Y_r, n_r(y))
//! ```
//!
//! which evaluates on the class (α, β) to ∏_r C(n_r(α), n_r(x))·C(n_r(β),
//! n_r(y)), the number of ways to mark a sub-cycle-type of shape (x, y).
//! This basis makes products integral, keeps coefficients small, and gives
//! the averaged value over a whole group a closed form: for n ≥ |x| + |y|
//! the mean of a basis element over W_n is exactly 1/z_(x,y), the
//! reciprocal centralizer order of its index, independent of n.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{DoublePartition, Partition};
use crate::rational::{binomial, factorial, Integer, Rational};
use crate::weyl::{centralizer_order, conjugacy_classes, GroupKind};

/// A polynomial in the cycle-count variables, stored in the binomial basis
/// keyed by pairs of partitions. Keys carry no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CharacterPolynomial {
    terms: BTreeMap<DoublePartition, Rational>,
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(DoublePartition::default(), c);
        }
        Self { terms }
    }

    /// The variable X_r (number of positive r-cycles); requires r ≥ 1.
    pub fn x_var(r: usize) -> Result<Self> {
        Self::cycle_var(r, true)
    }

    /// The variable Y_r (number of negative r-cycles); requires r ≥ 1.
    pub fn y_var(r: usize) -> Result<Self> {
        Self::cycle_var(r, false)
    }

    fn cycle_var(r: usize, positive: bool) -> Result<Self> {
        if r == 0 {
            return Err(Error::Validation(
                "cycle-length subscript must be at least 1".into(),
            ));
        }
        let part = Partition::row(r);
        let key = if positive {
            DoublePartition::new(part, Partition::empty())
        } else {
            DoublePartition::new(Partition::empty(), part)
        };
        Ok(Self::basis_term(key))
    }

    /// The basis element ∏_r C(X_r, n_r(x))·C(Y_r, n_r(y)) for key (x, y).
    pub fn basis_term(key: DoublePartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, Rational::one());
        Self { terms }
    }

    /// Basis expansion, keyed by (x, y) with nonzero coefficients only.
    pub fn terms(&self) -> &BTreeMap<DoublePartition, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree: max of |x| + |y| over basis keys (0 for the zero
    /// polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(DoublePartition::total).max().unwrap_or(0)
    }

    fn add_term(&mut self, key: DoublePartition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Ring product, expanded back into the binomial basis.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c12 = c1 * c2;
                for (key, c) in mul_basis_keys(k1, k2) {
                    out.add_term(key, &c12 * Rational::from_integer(c));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The binomial coefficient C(self, k) = self·(self−1)⋯(self−k+1)/k!.
    ///
    /// Applied to a bare variable this reproduces a basis element:
    /// C(X_r, k) has the single key (r^k, ∅).
    pub fn binomial_of(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for i in 0..k {
            let shifted = self.sub(&Self::constant(Rational::from_integer(Integer::from(i))));
            acc = acc.mul(&shifted);
        }
        acc.scale(&(Rational::one() / Rational::from_integer(factorial(k))))
    }

    /// Value on the class with cycle type `label` (β = ∅ for type A
    /// classes). The rank n is implicit in the label.
    pub fn evaluate(&self, label: &DoublePartition) -> Rational {
        let mut total = Rational::zero();
        for (key, c) in &self.terms {
            let mut ways = Integer::one();
            for (&r, &m) in key.positive.multiplicities().iter() {
                ways *= binomial(label.positive.multiplicity(r), m);
                if ways.is_zero() {
                    break;
                }
            }
            if !ways.is_zero() {
                for (&r, &m) in key.negative.multiplicities().iter() {
                    ways *= binomial(label.negative.multiplicity(r), m);
                    if ways.is_zero() {
                        break;
                    }
                }
            }
            total += c * Rational::from_integer(ways);
        }
        total
    }

    /// Mean of `self · other` over W_n: (1/|W|) Σ_classes |class|·P·Q.
    pub fn inner_product(&self, other: &Self, n: usize, kind: GroupKind) -> Rational {
        let order = Rational::from_integer(crate::weyl::group_order(n, kind));
        let mut acc = Rational::zero();
        for class in conjugacy_classes(n, kind) {
            acc += Rational::from_integer(class.size)
                * self.evaluate(&class.label)
                * other.evaluate(&class.label);
        }
        acc / order
    }

    /// Mean of `self` over W_n for every n ≥ degree, in closed form:
    /// Σ_keys coeff/z_key. Keys whose basis functions vanish identically on
    /// the requested kind (a Y-variable in type A) contribute 0.
    pub fn stable_inner_product_with_one(&self, kind: GroupKind) -> Rational {
        let mut acc = Rational::zero();
        for (key, c) in &self.terms {
            if kind == GroupKind::A && !key.negative.is_empty() {
                continue;
            }
            let z = centralizer_order(key, kind).expect("key matches kind");
            acc += c / Rational::from_integer(z);
        }
        acc
    }

    /// Mean of `self · other` over W_n for every n ≥ deg(self)+deg(other),
    /// in closed form.
    pub fn stable_inner_product(&self, other: &Self, kind: GroupKind) -> Rational {
        self.mul(other).stable_inner_product_with_one(kind)
    }

    /// Canonical rendering; [`CharacterPolynomial::parse`] accepts it back.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&DoublePartition> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.total(), b).cmp(&(a.total(), a)));
        let mut out = String::new();
        for key in keys {
            let c = &self.terms[key];
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let key_str = render_key(key);
            if key_str.is_empty() {
                out.push_str(&crate::rational::render_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&key_str);
            } else {
                out.push_str(&crate::rational::render_rational(&mag));
                out.push('*');
                out.push_str(&key_str);
            }
        }
        out
    }

    /// Parses expressions in the variables `X<r>`, `Y<r>` with `+ - *`,
    /// parentheses, integer and `p/q` literals, and the binomial operator
    /// `C(expr, k)`.
    pub fn parse(input: &str) -> Result<Self> {
        Parser::new(input).parse_all()
    }
}

impl fmt::Display for CharacterPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `X1*C(X2,2)*Y1` style rendering of a basis key; empty string for the
/// constant key.
fn render_key(key: &DoublePartition) -> String {
    let mut factors = Vec::new();
    for (letter, part) in [('X', &key.positive), ('Y', &key.negative)] {
        for (&r, &m) in part.multiplicities().iter() {
            if m == 1 {
                factors.push(format!("{letter}{r}"));
            } else {
                factors.push(format!("C({letter}{r},{m})"));
            }
        }
    }
    factors.join("*")
}

/// Coefficients c_k in C(v,a)·C(v,b) = Σ_k c_k·C(v,k) for a single
/// variable v, nonzero exactly for max(a,b) ≤ k ≤ a+b.
fn binomial_product_coeffs(a: usize, b: usize) -> Vec<(usize, Integer)> {
    let lo = a.max(b);
    let hi = a + b;
    (lo..=hi)
        .map(|k| {
            let mut c = Integer::zero();
            for i in 0..=k {
                let term = binomial(k, i) * binomial(i, a) * binomial(i, b);
                if (k - i) % 2 == 0 {
                    c += term;
                } else {
                    c -= term;
                }
            }
            (k, c)
        })
        .collect()
}

/// Expands the product of two basis elements in the binomial basis. Each
/// cycle-length variable expands independently; the result is the tensor
/// product of the per-variable expansions.
fn mul_basis_keys(
    k1: &DoublePartition,
    k2: &DoublePartition,
) -> Vec<(DoublePartition, Integer)> {
    let expand_side = |p1: &Partition, p2: &Partition| -> Vec<(Vec<usize>, Integer)> {
        let m1 = p1.multiplicities();
        let m2 = p2.multiplicities();
        let mut rs: Vec<usize> = m1.keys().chain(m2.keys()).copied().collect();
        rs.sort_unstable();
        rs.dedup();
        let mut acc: Vec<(Vec<usize>, Integer)> = vec![(Vec::new(), Integer::one())];
        for r in rs {
            let a = m1.get(&r).copied().unwrap_or(0);
            let b = m2.get(&r).copied().unwrap_or(0);
            let choices = binomial_product_coeffs(a, b);
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for (parts, c) in &acc {
                for (k, ck) in &choices {
                    let mut parts = parts.clone();
                    parts.extend(std::iter::repeat(r).take(*k));
                    next.push((parts, c * ck));
                }
            }
            acc = next;
        }
        acc
    };
    let xs = expand_side(&k1.positive, &k2.positive);
    let ys = expand_side(&k1.negative, &k2.negative);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for (xp, cx) in &xs {
        for (yp, cy) in &ys {
            let key = DoublePartition::new(
                Partition::from_unsorted(xp.clone()).expect("positive parts"),
                Partition::from_unsorted(yp.clone()).expect("positive parts"),
            );
            out.push((key, cx * cy));
        }
    }
    out
}

/// Recursive-descent parser over the expression grammar.
struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn parse_all(mut self) -> Result<CharacterPolynomial> {
        if self.src.trim().is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty expression".into(),
            });
        }
        let e = self.expr()?;
        self.skip_ws();
        if self.pos < self.chars.len() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(e)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("expected {c:?}"))),
        }
    }

    fn expr(&mut self) -> Result<CharacterPolynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CharacterPolynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CharacterPolynomial> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<CharacterPolynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('X') | Some('Y') => {
                let letter = self.bump().unwrap();
                self.skip_ws();
                let substart = self.pos;
                let r = self.integer()?;
                if r == 0 {
                    return Err(Error::Parse {
                        pos: substart,
                        msg: "cycle-length subscript must be at least 1".into(),
                    });
                }
                if letter == 'X' {
                    CharacterPolynomial::x_var(r)
                } else {
                    CharacterPolynomial::y_var(r)
                }
            }
            Some('C') => {
                self.pos += 1;
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(',')?;
                let k = self.integer()?;
                self.expect(')')?;
                Ok(e.binomial_of(k))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let q = self.integer()?;
                    if q == 0 {
                        return Err(self.err("zero denominator"));
                    }
                    Ok(CharacterPolynomial::constant(Rational::new(
                        Integer::from(p),
                        Integer::from(q),
                    )))
                } else {
                    Ok(CharacterPolynomial::constant(Rational::from_integer(
                        Integer::from(p),
                    )))
                }
            }
            _ => Err(self.err("expected a variable, literal, C(...), or parenthesized expression")),
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<usize>().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("integer out of range: {text}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::double_partitions;
    use crate::rational::{frac, rat};

    fn p(s: &str) -> CharacterPolynomial {
        CharacterPolynomial::parse(s).unwrap()
    }

    #[test]
    fn parse_render_round_trips() {
        for s in [
            "X1",
            "Y2",
            "C(X1,2)",
            "2*C(X1,2) + X1",
            "X1*Y2",
            "X2 + C(X1,2) - X1*Y1 - Y2 + C(Y1,2)",
            "-X1 + 1/2",
            "0",
            "1",
        ] {
            let poly = p(s);
            assert_eq!(poly.render(), s, "canonical form of {s:?}");
            assert_eq!(CharacterPolynomial::parse(&poly.render()).unwrap(), poly);
        }
        // Non-canonical spellings normalize.
        assert_eq!(p("Y1 + X1").render(), "X1 + Y1");
        assert_eq!(p("X1 - X1").render(), "0");
        assert_eq!(p("C(X1, 2) * 2").render(), "2*C(X1,2)");
    }

    #[test]
    fn parse_errors_carry_positions() {
        for (src, pos) in [("X0", 1), ("C(X1)", 4), ("(X1", 3), ("X1 X2", 3), ("", 0)] {
            match CharacterPolynomial::parse(src) {
                Err(Error::Parse { pos: got, .. }) => assert_eq!(got, pos, "position in {src:?}"),
                other => panic!("expected parse error for {src:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn products_expand_in_binomial_basis() {
        assert_eq!(p("X1*X1").render(), "2*C(X1,2) + X1");
        assert_eq!(p("C(X1,2)*X1").render(), "3*C(X1,3) + 2*C(X1,2)");
        // Cross-variable products stay a single key.
        assert_eq!(p("X1*Y1").terms().len(), 1);
        // Vandermonde: C(X1+Y1,2) = C(X1,2) + X1·Y1 + C(Y1,2).
        assert_eq!(p("C(X1+Y1,2)"), p("C(X1,2) + X1*Y1 + C(Y1,2)"));
        // A numeric sanity check of the same identity on a class.
        let label = DoublePartition::parse("(1,1,1),(1,1)").unwrap();
        assert_eq!(p("C(X1+Y1,2)").evaluate(&label), rat(10));
    }

    #[test]
    fn binomial_of_a_variable_is_a_basis_key() {
        let c3 = CharacterPolynomial::x_var(2).unwrap().binomial_of(3);
        let key = DoublePartition::parse("(2,2,2),()").unwrap();
        assert_eq!(c3, CharacterPolynomial::basis_term(key));
    }

    #[test]
    fn evaluation_counts_marked_substructures() {
        let poly = p("X1 + Y1");
        assert_eq!(poly.evaluate(&DoublePartition::parse("(1),(1)").unwrap()), rat(2));
        assert_eq!(poly.evaluate(&DoublePartition::parse("(2),()").unwrap()), rat(0));
        let c2 = p("C(X1,2)");
        assert_eq!(c2.evaluate(&DoublePartition::parse("(1,1,1),()").unwrap()), rat(3));
        assert_eq!(p("X2").evaluate(&DoublePartition::parse("(2,2,1),(2)").unwrap()), rat(2));
    }

    #[test]
    fn basis_term_is_class_indicator_at_its_own_size() {
        let key = DoublePartition::parse("(2),(1)").unwrap();
        let poly = CharacterPolynomial::basis_term(key.clone());
        for label in double_partitions(3) {
            let expect = if label == key { rat(1) } else { rat(0) };
            assert_eq!(poly.evaluate(&label), expect, "at {label}");
        }
    }

    #[test]
    fn stable_means_match_reciprocal_centralizers() {
        assert_eq!(p("1").stable_inner_product_with_one(GroupKind::Bc), rat(1));
        assert_eq!(p("X1").stable_inner_product_with_one(GroupKind::Bc), frac(1, 2));
        assert_eq!(p("Y1").stable_inner_product_with_one(GroupKind::Bc), frac(1, 2));
        assert_eq!(p("C(X1,2)").stable_inner_product_with_one(GroupKind::Bc), frac(1, 8));
        assert_eq!(p("X1").stable_inner_product_with_one(GroupKind::A), rat(1));
        assert_eq!(p("C(X1,2)").stable_inner_product_with_one(GroupKind::A), frac(1, 2));
        assert_eq!(p("X2").stable_inner_product_with_one(GroupKind::A), frac(1, 2));
        // Y-keys vanish identically on type A classes.
        assert_eq!(p("Y1").stable_inner_product_with_one(GroupKind::A), rat(0));
    }

    #[test]
    fn group_means_stabilize_at_the_degree() {
        // ⟨X1·X1, 1⟩ = 2/8 + 1/2 = 3/4 once n ≥ 2, but 1/2 at n = 1.
        let x1 = p("X1");
        assert_eq!(x1.inner_product(&x1, 1, GroupKind::Bc), frac(1, 2));
        for n in 2..=5 {
            assert_eq!(x1.inner_product(&x1, n, GroupKind::Bc), frac(3, 4), "n={n}");
        }
        assert_eq!(x1.stable_inner_product(&x1, GroupKind::Bc), frac(3, 4));
        // Type A: mean number of fixed points is 1 for all n ≥ 1.
        let one = CharacterPolynomial::one();
        for n in 1..=6 {
            assert_eq!(x1.inner_product(&one, n, GroupKind::A), rat(1), "n={n}");
        }
    }

    #[test]
    fn degrees() {
        assert_eq!(p("C(X1+Y1,2) - X2 - Y2").degree(), 2);
        assert_eq!(p("7").degree(), 0);
        assert_eq!(CharacterPolynomial::zero().degree(), 0);
        assert_eq!(p("C(X3,2)*Y1").degree(), 7);
    }
}
