//! Exact isolation of positive real roots with Sturm sequences.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{rational_to_f64, Poly1, Rational};

/// A positive real algebraic number, the unique root of `defining_poly` in
/// the half-open interval `(lo, hi]`.
///
/// `defining_poly` is monic and square-free. When the root is rational it is
/// stored in `exact_value` and the defining polynomial is `t - exact_value`.
/// `lo` is never a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicRadius {
    defining_poly: Poly1,
    lo: Rational,
    hi: Rational,
    exact_value: Option<Rational>,
}

impl AlgebraicRadius {
    /// The rational radius `value`, isolated in `(value/2, 2 value]`.
    /// Panics unless `value > 0`.
    pub fn rational(value: Rational) -> Self {
        assert!(value.is_positive(), "radii are positive");
        let two = Rational::from_integer(2.into());
        AlgebraicRadius {
            defining_poly: Poly1::linear_root(value.clone()),
            lo: &value / &two,
            hi: &value * &two,
            exact_value: Some(value),
        }
    }

    /// The unique root of `poly` in `(lo, hi]`, or `None` when `poly` does
    /// not have exactly one root there (or has one at `lo`), or `lo < 0`.
    pub fn from_isolating_interval(poly: &Poly1, lo: Rational, hi: Rational) -> Option<Self> {
        if poly.degree() < 1 || lo.is_negative() || lo >= hi {
            return None;
        }
        let sf = poly.square_free();
        if sf.eval(&lo).is_zero() || sturm_count(&sturm_sequence(&sf), &lo, &hi) != 1 {
            return None;
        }
        let mut root = AlgebraicRadius { defining_poly: sf, lo, hi, exact_value: None };
        root.detect_rational();
        Some(root)
    }

    pub fn defining_poly(&self) -> &Poly1 {
        &self.defining_poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn exact_value(&self) -> Option<&Rational> {
        self.exact_value.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.exact_value.is_some()
    }

    /// A copy whose isolating interval is no wider than `width`.
    pub fn refined(&self, width: &Rational) -> AlgebraicRadius {
        let mut out = self.clone();
        out.refine_to(width);
        out
    }

    fn refine_to(&mut self, width: &Rational) {
        if let Some(v) = &self.exact_value {
            let half = width / Rational::from_integer(2.into());
            if &self.hi - &self.lo > *width {
                self.lo = v - &half;
                if self.lo.is_negative() {
                    self.lo = v / Rational::from_integer(2.into());
                }
                self.hi = v + half;
            }
            return;
        }
        let p = &self.defining_poly;
        let lo_sign = sign(&p.eval(&self.lo));
        while &self.hi - &self.lo > *width {
            let mid = split_point(p, &self.lo, &self.hi);
            if sign(&p.eval(&mid)) == lo_sign {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    /// Tests whether the interval holds a rational root `m / lc`, with `lc`
    /// the leading coefficient of the primitive integer form.
    fn detect_rational(&mut self) {
        if self.defining_poly.degree() == 1 {
            let value = -self.defining_poly.coeff(0) / self.defining_poly.coeff(1);
            self.defining_poly = Poly1::linear_root(value.clone());
            self.exact_value = Some(value);
            return;
        }
        let ints = self.defining_poly.to_primitive_integer();
        let lc = ints.last().expect("nonzero polynomial").clone();
        let width = Rational::new(BigInt::one(), lc.clone() + BigInt::one());
        self.refine_to(&width);
        let m = (&self.hi * Rational::from_integer(lc.clone())).floor().to_integer();
        let candidate = Rational::new(m, lc);
        if candidate > self.lo && self.defining_poly.eval(&candidate).is_zero() {
            self.defining_poly = Poly1::linear_root(candidate.clone());
            self.exact_value = Some(candidate);
        }
    }

    /// Whether `p` vanishes at this root.
    pub fn is_root_of(&self, p: &Poly1) -> bool {
        if let Some(v) = &self.exact_value {
            return p.eval(v).is_zero();
        }
        if p.is_zero() {
            return true;
        }
        let h = self.defining_poly.gcd(p);
        h.degree() >= 1 && sturm_count(&sturm_sequence(&h), &self.lo, &self.hi) == 1
    }

    /// Compares the values of two radii exactly.
    pub fn cmp_value(&self, other: &AlgebraicRadius) -> Ordering {
        if let (Some(a), Some(b)) = (&self.exact_value, &other.exact_value) {
            return a.cmp(b);
        }
        if self.hi <= other.lo {
            return Ordering::Less;
        }
        if other.hi <= self.lo {
            return Ordering::Greater;
        }
        let common = self.defining_poly.gcd(&other.defining_poly);
        if self.is_root_of(&common) && other.is_root_of(&common) {
            let lo = (&self.lo).max(&other.lo);
            let hi = (&self.hi).min(&other.hi);
            if lo < hi && sturm_count(&sturm_sequence(&common), lo, hi) == 1 {
                return Ordering::Equal;
            }
        }
        let width = (&self.hi - &self.lo).min(&other.hi - &other.lo) / Rational::from_integer(4.into());
        self.refined(&width).cmp_value(&other.refined(&width))
    }

    /// Double-precision approximation.
    pub fn to_f64(&self) -> f64 {
        if let Some(v) = &self.exact_value {
            return rational_to_f64(v);
        }
        let scale = rational_to_f64(&self.hi).max(1.0);
        let width = Rational::from_float(scale * 2f64.powi(-60)).expect("finite width");
        let r = self.refined(&width);
        rational_to_f64(&((&r.lo + &r.hi) / Rational::from_integer(2.into())))
    }
}

impl fmt::Display for AlgebraicRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact_value {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "root of {} in ({}, {}]", self.defining_poly, self.lo, self.hi),
        }
    }
}

fn sign(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// A point of `(lo, hi)` that is not a root of `p`: the midpoint, else the
/// first of `lo + k/(2k+1) (hi - lo)`, `k = 1, 2, ...`.
fn split_point(p: &Poly1, lo: &Rational, hi: &Rational) -> Rational {
    let mid = (lo + hi) / Rational::from_integer(2.into());
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    (1i64..)
        .map(|k| lo + (hi - lo) * Rational::new(k.into(), (2 * k + 1).into()))
        .find(|point| !p.eval(point).is_zero())
        .expect("finitely many roots")
}

/// Sturm sequence `p, p', -rem(p, p'), ...` of a square-free polynomial.
pub fn sturm_sequence(p: &Poly1) -> Vec<Poly1> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let rem = seq.last().expect("nonempty").div_rem(&next).1;
        seq.push(next);
        // positive rescaling keeps signs and bounds coefficient growth
        next = -&normalise(&rem);
    }
    seq
}

fn normalise(p: &Poly1) -> Poly1 {
    match p.leading() {
        Some(lc) => p.scale(&lc.abs().recip()),
        None => Poly1::zero(),
    }
}

fn variations(seq: &[Poly1], at: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|p| sign(&p.eval(at))).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct roots in `(lo, hi]`.
pub fn sturm_count(seq: &[Poly1], lo: &Rational, hi: &Rational) -> usize {
    variations(seq, lo).saturating_sub(variations(seq, hi))
}

/// Strict upper bound `1 + max |a_i / a_n|` on the absolute value of roots.
fn cauchy_bound(p: &Poly1) -> Rational {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Rational::zero);
    Rational::one() + max.ceil()
}

/// All distinct roots of `p` in `(0, inf)`, ascending, or `None` for the zero
/// polynomial.
pub fn isolate_positive_roots(p: &Poly1) -> Option<Vec<AlgebraicRadius>> {
    if p.is_zero() {
        return None;
    }
    let mut sf = p.square_free();
    if sf.degree() < 1 {
        return Some(Vec::new());
    }
    if sf.coeff(0).is_zero() {
        sf = sf.div_rem(&Poly1::var()).0;
    }
    if sf.degree() < 1 {
        return Some(Vec::new());
    }
    let seq = sturm_sequence(&sf);
    let mut out = Vec::new();
    isolate(&sf, &seq, Rational::zero(), cauchy_bound(&sf), &mut out);
    for root in &mut out {
        root.detect_rational();
    }
    Some(out)
}

fn isolate(p: &Poly1, seq: &[Poly1], lo: Rational, hi: Rational, out: &mut Vec<AlgebraicRadius>) {
    match sturm_count(seq, &lo, &hi) {
        0 => {}
        1 => out.push(AlgebraicRadius { defining_poly: p.clone(), lo, hi, exact_value: None }),
        _ => {
            let mid = split_point(p, &lo, &hi);
            isolate(p, seq, lo, mid.clone(), out);
            isolate(p, seq, mid, hi, out);
        }
    }
}

/// Exact rational roots of `p` (all signs), ascending, via the integer
/// rational-root candidates of the square-free part.
pub fn rational_roots(p: &Poly1) -> Vec<Rational> {
    if p.degree() < 1 {
        return Vec::new();
    }
    let mut roots: Vec<Rational> = Vec::new();
    let mirrored = mirror(p);
    for (q, negate) in [(p, false), (&mirrored, true)] {
        for r in isolate_positive_roots(q).unwrap_or_default() {
            if let Some(v) = r.exact_value {
                roots.push(if negate { -v } else { v });
            }
        }
    }
    if p.eval(&Rational::zero()).is_zero() {
        roots.push(Rational::zero());
    }
    roots.sort();
    roots
}

/// `p(-t)`.
pub fn mirror(p: &Poly1) -> Poly1 {
    Poly1::new(p.coeffs().iter().enumerate().map(|(k, c)| if k.is_odd() { -c } else { c.clone() }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn example_quadratic_roots_are_exact() {
        // -(r-2)(r-5)
        let p = Poly1::from_ints(&[-10, 7, -1]);
        let roots = isolate_positive_roots(&p).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact_value().cloned()).collect();
        assert_eq!(exact, vec![Some(int(2)), Some(int(5))]);
    }

    #[test]
    fn cubic_with_negative_root() {
        let p = Poly1::from_ints(&[2, 7, -196, 96]);
        let roots = isolate_positive_roots(&p).unwrap();
        let exact: Vec<_> = roots.iter().map(|r| r.exact_value().cloned().unwrap()).collect();
        assert_eq!(exact, vec![rat(1, 8), int(2)]);
        assert_eq!(rational_roots(&p), vec![rat(-1, 12), rat(1, 8), int(2)]);
    }

    #[test]
    fn irrational_root_is_isolated() {
        let p = Poly1::from_ints(&[-2, 0, 1]);
        let roots = isolate_positive_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        let r = &roots[0];
        assert!(r.exact_value().is_none());
        assert_eq!(r.defining_poly(), &p);
        let (lo, hi) = r.interval();
        assert!(lo * lo < int(2) && int(2) <= hi * hi);
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let fine = r.refined(&rat(1, 1_000_000));
        let (lo, hi) = fine.interval();
        assert!(hi - lo <= rat(1, 1_000_000));
        assert!(r.is_root_of(&Poly1::from_ints(&[-4, 0, 0, 0, 1])));
        assert!(!r.is_root_of(&Poly1::from_ints(&[2, 0, 1])));
        let pinned = AlgebraicRadius::from_isolating_interval(&p, int(1), rat(3, 2)).unwrap();
        assert_eq!(pinned.cmp_value(r), Ordering::Equal);
        assert!(pinned.exact_value().is_none());
    }

    #[test]
    fn zero_and_multiplicity() {
        assert!(isolate_positive_roots(&Poly1::zero()).is_none());
        // t^2 (t-3)^2 (t+1)
        let p = &(&Poly1::from_ints(&[0, 0, 1]) * &Poly1::from_ints(&[-3, 1]).pow(2)) * &Poly1::from_ints(&[1, 1]);
        let roots = isolate_positive_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].exact_value(), Some(&int(3)));
        assert!(isolate_positive_roots(&Poly1::from_ints(&[5])).unwrap().is_empty());
    }

    #[test]
    fn ordering_matches_values() {
        let sqrt2 = isolate_positive_roots(&Poly1::from_ints(&[-2, 0, 1])).unwrap().remove(0);
        let sqrt3 = isolate_positive_roots(&Poly1::from_ints(&[-3, 0, 1])).unwrap().remove(0);
        assert_eq!(sqrt2.cmp_value(&sqrt3), Ordering::Less);
        assert_eq!(AlgebraicRadius::rational(rat(7, 5)).cmp_value(&sqrt2), Ordering::Less);
        assert_eq!(AlgebraicRadius::rational(rat(3, 2)).cmp_value(&sqrt2), Ordering::Greater);
        // sqrt 2 as a root of t^4 - 4
        let other = isolate_positive_roots(&Poly1::from_ints(&[-4, 0, 0, 0, 1])).unwrap().remove(0);
        assert_eq!(sqrt2.cmp_value(&other), Ordering::Equal);
    }

    #[test]
    fn rejects_bad_isolating_intervals() {
        let p = Poly1::from_ints(&[-10, 7, -1]);
        assert!(AlgebraicRadius::from_isolating_interval(&p, int(0), int(10)).is_none());
        assert!(AlgebraicRadius::from_isolating_interval(&p, int(2), int(3)).is_none());
        let five = AlgebraicRadius::from_isolating_interval(&p, int(3), int(5)).unwrap();
        assert_eq!(five.exact_value(), Some(&int(5)));
    }
}
