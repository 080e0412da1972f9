use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Dense univariate polynomial; `coeffs[k]` multiplies `t^k`.
///
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case the vector is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn zero() -> Self {
        Poly1::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly1::new(vec![c])
    }

    /// The identity polynomial `t`.
    pub fn var() -> Self {
        Poly1::new(vec![Rational::zero(), Rational::one()])
    }

    /// `t - root`.
    pub fn linear_root(root: Rational) -> Self {
        Poly1::new(vec![-root, Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly1::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + super::rational_to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly1 {
        Poly1::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer(BigInt::from(k))).collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Poly1 {
        let mut acc = Poly1::constant(Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly1 {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly1::zero(),
        }
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly1) -> (Poly1, Poly1) {
        let lc = divisor.leading().expect("division by the zero polynomial").clone();
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if self.degree() < dd {
            return (Poly1::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); (self.degree() - dd + 1) as usize];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd as usize] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd.max(0) as usize);
        (Poly1::new(quot), Poly1::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly1) -> Poly1 {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            // keep intermediate coefficients small
            b = primitive_rational(&r);
        }
        a.monic()
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn square_free(&self) -> Poly1 {
        if self.degree() <= 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Scales to an integer polynomial with coprime coefficients and a
    /// positive leading coefficient.
    pub fn to_primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Composition `self(inner(t))`.
    pub fn compose(&self, inner: &Poly1) -> Poly1 {
        self.coeffs.iter().rev().fold(Poly1::zero(), |acc, c| &(&acc * inner) + &Poly1::constant(c.clone()))
    }
}

fn primitive_rational(p: &Poly1) -> Poly1 {
    Poly1::new(p.to_primitive_integer().into_iter().map(Rational::from_integer).collect())
}

impl Add for &Poly1 {
    type Output = Poly1;

    fn add(self, rhs: &Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;

    fn sub(self, rhs: &Poly1) -> Poly1 {
        self + &(-rhs)
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;

    fn neg(self) -> Poly1 {
        Poly1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;

    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::new(out)
    }
}

/// Descending powers of `t`, same coefficient syntax as [`super::Poly2`].
impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
