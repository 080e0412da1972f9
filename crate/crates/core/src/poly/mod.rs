//! Exact-rational polynomials in one and two variables.
//!
//! [`Poly2`] is a sparse map from exponent pairs to nonzero coefficients,
//! ordered graded-lexicographically with `x` before `y`. [`Poly1`] is a
//! dense coefficient vector indexed by exponent.

mod parse;
mod univariate;

pub use parse::{parse_poly, parse_poly_principal, ParseError};
pub use univariate::Poly1;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Lossy conversion used only by the numeric geometry and for display.
pub fn rational_to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // numer/denom individually overflow f64; scale them down together
        let n = value.numer().bits() as i64;
        let d = value.denom().bits() as i64;
        let shift = (n.max(d) - 900).max(0) as usize;
        let numer = (value.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let denom = (value.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        numer / denom
    })
}

/// A sign in `{-1, +1}`: the surface signal, or the sign in the generator
/// `x r^2 - 2 r y + eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Epsilon {
    Minus,
    Plus,
}

impl Epsilon {
    pub const BOTH: [Epsilon; 2] = [Epsilon::Minus, Epsilon::Plus];

    pub fn value(self) -> i64 {
        match self {
            Epsilon::Minus => -1,
            Epsilon::Plus => 1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn as_rational(self) -> Rational {
        int(self.value())
    }

    /// `eps^k`.
    pub fn pow(self, k: u32) -> Epsilon {
        if self == Epsilon::Minus && k % 2 == 1 {
            Epsilon::Minus
        } else {
            Epsilon::Plus
        }
    }

    pub fn from_sign(value: i64) -> Option<Epsilon> {
        match value {
            1 => Some(Epsilon::Plus),
            -1 => Some(Epsilon::Minus),
            _ => None,
        }
    }
}

impl Neg for Epsilon {
    type Output = Epsilon;

    fn neg(self) -> Epsilon {
        match self {
            Epsilon::Minus => Epsilon::Plus,
            Epsilon::Plus => Epsilon::Minus,
        }
    }
}

impl Mul for Epsilon {
    type Output = Epsilon;

    fn mul(self, rhs: Epsilon) -> Epsilon {
        if self == rhs {
            Epsilon::Plus
        } else {
            Epsilon::Minus
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Minus => "-1",
            Epsilon::Plus => "+1",
        })
    }
}

/// Exponent pair `x^x * y^y`, ordered by total degree then by `x` exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Bivariate polynomial over the rationals, in canonical sparse form.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality. The zero polynomial has no terms and degree `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly2::monomial(c, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Poly2::zero();
        p.add_term(Monomial::new(i, j), c);
        p
    }

    pub fn x() -> Self {
        Poly2::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Poly2::monomial(Rational::one(), 0, 1)
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Rational)>,
    {
        let mut p = Poly2::zero();
        for (i, j, c) in terms {
            p.add_term(Monomial::new(i, j), c);
        }
        p
    }

    /// The linear polynomial `a x + b y + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Poly2::from_terms([(1, 0, a), (0, 1, b), (0, 0, c)])
    }

    /// The tube generator `x r^2 - 2 r y + eps`.
    pub fn tube_generator(r: &Rational, eps: Epsilon) -> Self {
        Poly2::linear(r * r, -(r * int(2)), eps.as_rational())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&Monomial::new(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Borrowing variant of [`Poly2::coeff`]; `None` for absent terms.
    pub fn coeff_ref(&self, i: u32, j: u32) -> Option<&Rational> {
        self.terms.get(&Monomial::new(i, j))
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + c * num_traits::pow(x.clone(), m.x as usize) * num_traits::pow(y.clone(), m.y as usize)
        })
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|(m, c)| rational_to_f64(c) * x.powi(m.x as i32) * y.powi(m.y as i32)).sum()
    }

    /// Collects `Q` as a polynomial in `y` with coefficients in `x`:
    /// entry `i` of the result is the univariate polynomial in `y`
    /// multiplying `x^i`.
    pub fn coefficients_in_x(&self) -> Vec<Poly1> {
        let top = self.terms.keys().map(|m| m.x).max();
        let Some(top) = top else {
            return Vec::new();
        };
        let mut columns: Vec<Vec<Rational>> = vec![Vec::new(); top as usize + 1];
        for (m, c) in &self.terms {
            let column = &mut columns[m.x as usize];
            if column.len() <= m.y as usize {
                column.resize(m.y as usize + 1, Rational::zero());
            }
            column[m.y as usize] = c.clone();
        }
        columns.into_iter().map(Poly1::new).collect()
    }

    pub fn pow(&self, k: u32) -> Poly2 {
        let mut acc = Poly2::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;

    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        Poly2 { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;

    fn neg(self) -> Poly2 {
        -&self
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: &Poly2) -> Poly2 {
        self + &(-rhs)
    }
}

impl Sub for Poly2 {
    type Output = Poly2;

    fn sub(self, rhs: Poly2) -> Poly2 {
        &self - &rhs
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("x", m.x), ("y", m.y)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Prints terms in descending graded-lex order using the parser's grammar,
/// e.g. `x^3 + x^2*y - 3/2*x*y^2 + 5`.
impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_radii() -> Poly2 {
        Poly2::from_terms([(0, 1, int(14)), (1, 0, int(-25)), (1, 1, int(100)), (0, 2, int(-40)), (0, 0, int(-1))])
    }

    #[test]
    fn additive_inverse_is_empty() {
        let p = Poly2::x() + Poly2::y();
        let q = -Poly2::x() - Poly2::y();
        let sum = &p + &q;
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
        assert_eq!(sum.degree(), -1);
    }

    #[test]
    fn product_matches_hand_expansion() {
        let generator = Poly2::tube_generator(&int(5), Epsilon::Plus);
        assert_eq!(generator.to_string(), "25*x - 10*y + 1");
        let quotient = Poly2::linear(int(0), int(4), int(-1));
        assert_eq!(&generator * &quotient, two_radii());
    }

    #[test]
    fn display_order_is_graded_lex_x_first() {
        let q = Poly2::from_terms([
            (3, 0, int(1)),
            (2, 1, int(1)),
            (1, 2, int(3)),
            (2, 0, int(2)),
            (1, 1, int(4)),
            (0, 2, int(1)),
            (1, 0, int(5)),
            (0, 1, int(2)),
            (0, 0, int(-24)),
        ]);
        assert_eq!(q.to_string(), "x^3 + x^2*y + 3*x*y^2 + 2*x^2 + 4*x*y + y^2 + 5*x + 2*y - 24");
        assert_eq!(Poly2::monomial(rat(-3, 2), 0, 2).to_string(), "-3/2*y^2");
        assert_eq!(Poly2::zero().to_string(), "0");
    }

    #[test]
    fn eval_and_degree() {
        let q = two_radii();
        assert_eq!(q.degree(), 2);
        assert_eq!(
            q.eval(&int(0), &rat(1, 4)),
            rat(-1, 1) * int(0) + int(14) * rat(1, 4) - int(40) * rat(1, 16) - int(1)
        );
        assert!(q == q.clone());
        assert_eq!(Poly2::constant(int(3)).degree(), 0);
    }

    #[test]
    fn epsilon_algebra() {
        assert_eq!(Epsilon::Minus * Epsilon::Minus, Epsilon::Plus);
        assert_eq!(-Epsilon::Plus, Epsilon::Minus);
        assert_eq!(Epsilon::Minus.pow(3), Epsilon::Minus);
        assert_eq!(Epsilon::Minus.pow(2), Epsilon::Plus);
        for e in Epsilon::BOTH {
            assert_eq!(e.value() * e.value(), 1);
        }
    }

    #[test]
    fn huge_rationals_convert_to_f64() {
        let big = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(400));
        assert!((rational_to_f64(&big) - 3.0).abs() < 1e-12);
    }
}
