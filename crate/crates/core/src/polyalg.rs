//! Membership in the principal ideal `<x r^2 - 2 r y + eps>`.
//!
//! A polynomial relation `Q(K, H) = 0` holds on every regular tube of radius
//! `r` and signal `eps` exactly when `Q` is a multiple of the tube generator
//! `x r^2 - 2 r y + eps`. Membership is decided by substituting the
//! parametrisation `(eps x / r, eps (x r + 1) / (2 r))` of the generator's
//! zero line and testing the resulting univariate polynomial for zero. The
//! coefficients of that substitution have the closed form computed by
//! [`gamma_at`]; [`divide_by_tube_factor`] recovers the cofactor from the
//! formal power series of `1 / (x r^2 - 2 r y + 1)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{int, Epsilon, Poly1, Poly2, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the radius must be nonzero")]
    ZeroRadius,
    #[error("the zero polynomial is not a Weingarten relation")]
    ZeroPolynomial,
    #[error("internal check failed: {0}")]
    InternalMismatch(String),
}

/// Generalised binomial coefficient `p (p-1) ... (p-q+1) / q!`, zero for
/// `q < 0`. For `p >= 0` this is the usual `C(p, q)` (zero when `q > p`).
pub fn binomial(p: i64, q: i64) -> BigInt {
    if q < 0 {
        return BigInt::zero();
    }
    if p >= 0 && q > p {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..q {
        num *= BigInt::from(p - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `sum_{m=0}^{n} (-1)^m C(x - m, j) C(n, m)` by direct summation.
///
/// Equals `C(x - n, j - n)` for every integer `x` and `j`.
pub fn binomial_alternating_sum(n: u32, x: i64, j: i64) -> BigInt {
    (0..=n as i64).fold(BigInt::zero(), |acc, m| {
        let term = binomial(x - m, j) * binomial(n as i64, m);
        if m % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

fn binom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(n as i64, k as i64))
}

fn pow(base: &Rational, e: u32) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

fn two_pow(e: u32) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

/// The coefficients `Gamma_0 .. Gamma_n` of `Q(x / r, (x r + 1) / (2 r))`,
/// with `n` the total degree of `Q`:
///
/// `Gamma_k(r) = sum_{i=0}^{k} sum_{j=0}^{n-k} C(k-i+j, j) a_{i,k-i+j} / (2^{k-i+j} r^{j+i})`.
///
/// The zero polynomial yields an empty list.
pub fn gamma_at(q: &Poly2, r: &Rational) -> Result<Vec<Rational>, AlgebraError> {
    if r.is_zero() {
        return Err(AlgebraError::ZeroRadius);
    }
    let n = q.degree();
    if n < 0 {
        return Ok(Vec::new());
    }
    let n = n as u32;
    let r_inv = r.recip();
    let gammas = (0..=n)
        .map(|k| {
            let mut acc = Rational::zero();
            for i in 0..=k {
                for j in 0..=(n - k) {
                    let ypow = k - i + j;
                    let Some(a) = q.coeff_ref(i, ypow) else {
                        continue;
                    };
                    acc += binom(ypow, j) * a * pow(&r_inv, j + i) / two_pow(ypow);
                }
            }
            acc
        })
        .collect();
    Ok(gammas)
}

/// Denominator-cleared coefficients `g_k(r) = 2^n r^n Gamma_k(r)` as
/// polynomials in `r`. For `r != 0`, `Gamma_k(r) = 0` iff `g_k(r) = 0`.
pub fn gamma_cleared(q: &Poly2) -> Result<Vec<Poly1>, AlgebraError> {
    if q.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let n = q.degree() as u32;
    let polys = (0..=n)
        .map(|k| {
            let mut coeffs = vec![Rational::zero(); n as usize + 1];
            for i in 0..=k {
                for j in 0..=(n - k) {
                    let ypow = k - i + j;
                    let Some(a) = q.coeff_ref(i, ypow) else {
                        continue;
                    };
                    coeffs[(n - j - i) as usize] += binom(ypow, j) * a * two_pow(n - ypow);
                }
            }
            Poly1::new(coeffs)
        })
        .collect();
    Ok(polys)
}

/// `Q_eps`, the polynomial with coefficients `eps^{i+j} a_{i,j}`.
pub fn epsilon_transform(q: &Poly2, eps: Epsilon) -> Poly2 {
    if eps == Epsilon::Plus {
        return q.clone();
    }
    Poly2::from_terms(q.terms().map(|(m, c)| {
        let c = match eps.pow(m.degree()) {
            Epsilon::Plus => c.clone(),
            Epsilon::Minus => -c,
        };
        (m.x, m.y, c)
    }))
}

/// `Q(eps x / r, eps (x r + 1) / (2 r))` expanded in `x`.
pub fn substitute_tube(q: &Poly2, r: &Rational, eps: Epsilon) -> Result<Poly1, AlgebraError> {
    if r.is_zero() {
        return Err(AlgebraError::ZeroRadius);
    }
    let e = eps.as_rational();
    let along_x = Poly1::new(vec![Rational::zero(), &e / r]);
    let along_y = Poly1::new(vec![&e / (r * int(2)), e / int(2)]);
    let max_i = q.terms().map(|(m, _)| m.x).max().unwrap_or(0);
    let max_j = q.terms().map(|(m, _)| m.y).max().unwrap_or(0);
    let x_pows = powers(&along_x, max_i);
    let y_pows = powers(&along_y, max_j);
    let out = q.terms().fold(Poly1::zero(), |acc, (m, c)| {
        let term = (&x_pows[m.x as usize] * &y_pows[m.y as usize]).scale(c);
        &acc + &term
    });
    debug_assert_eq!(
        out,
        Poly1::new(gamma_at(&epsilon_transform(q, eps), r)?),
        "substitution disagrees with the closed-form coefficients"
    );
    Ok(out)
}

fn powers(p: &Poly1, max: u32) -> Vec<Poly1> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(Poly1::constant(Rational::one()));
    for k in 1..=max as usize {
        let next = &out[k - 1] * p;
        out.push(next);
    }
    out
}

/// Whether `Q` lies in `<x r^2 - 2 r y + eps>`.
pub fn is_in_tube_ideal(q: &Poly2, r: &Rational, eps: Epsilon) -> Result<bool, AlgebraError> {
    Ok(substitute_tube(q, r, eps)?.is_zero())
}

/// The cofactor `R` with `Q = (x r^2 - 2 r y + eps) R`, or `None` when `Q`
/// is not a multiple of the generator.
///
/// Works on `Q_eps` (which lies in `<x r^2 - 2 r y + 1>`), where
/// `c_{i,j} = sum_{k<=i} sum_{l<=j} (-1)^k C(l+k, l) 2^l r^{l+2k} a_{i-k,j-l}`
/// for `i + j <= n - 1` are the cofactor's coefficients, then maps back.
/// The product is always re-checked before returning.
pub fn divide_by_tube_factor(q: &Poly2, r: &Rational, eps: Epsilon) -> Result<Option<Poly2>, AlgebraError> {
    if r.is_zero() {
        return Err(AlgebraError::ZeroRadius);
    }
    if !is_in_tube_ideal(q, r, eps)? {
        return Ok(None);
    }
    if q.is_zero() {
        return Ok(Some(Poly2::zero()));
    }
    let q_eps = epsilon_transform(q, eps);
    let n = q.degree() as u32;
    let r_pows: Vec<Rational> = (0..=(3 * n)).map(|e| pow(r, e)).collect();
    let mut cofactor = Vec::new();
    for total in 0..n {
        for i in 0..=total {
            let j = total - i;
            let mut c = Rational::zero();
            for k in 0..=i {
                for l in 0..=j {
                    let Some(a) = q_eps.coeff_ref(i - k, j - l) else {
                        continue;
                    };
                    let term = binom(l + k, l) * two_pow(l) * &r_pows[(l + 2 * k) as usize] * a;
                    if k % 2 == 0 {
                        c += term;
                    } else {
                        c -= term;
                    }
                }
            }
            cofactor.push((i, j, c));
        }
    }
    // Q_eps = (x r^2 - 2 r y + 1) R'  implies  Q = eps (x r^2 - 2 r y + eps) R'_eps
    let quotient = epsilon_transform(&Poly2::from_terms(cofactor), eps).scale(&eps.as_rational());
    let product = &Poly2::tube_generator(r, eps) * &quotient;
    if product != *q {
        return Err(AlgebraError::InternalMismatch(format!(
            "({}) * ({}) != {}",
            Poly2::tube_generator(r, eps),
            quotient,
            q
        )));
    }
    Ok(Some(quotient))
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn sign(value: &Rational) -> i64 {
    if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    pub(crate) const QUARTIC: &str =
        "4*x^4 + 8*x^2*y^2 - 12*x*y^3 + 9*x^3 + 9*x^2*y - 9*x*y^2 - 4*y^3 + 22*x^2 - 8*x*y - 7*y^2 - 91*x + 98*y - 24";
    const TWO_RADII: &str = "14*y - 25*x + 100*x*y - 40*y^2 - 1";

    fn quartic() -> Poly2 {
        parse_poly(QUARTIC).unwrap()
    }

    #[test]
    fn gamma_zero_matches_factored_independent_term() {
        let q = quartic();
        for r in [rat(1, 1), rat(2, 1), rat(1, 8), rat(-3, 7), rat(5, 2)] {
            let g0 = gamma_at(&q, &r).unwrap()[0].clone();
            let expected =
                -(int(96) * pow(&r, 3) - int(196) * pow(&r, 2) + int(7) * &r + int(2)) / (int(4) * pow(&r, 3));
            assert_eq!(g0, expected);
            let factored = -int(24) * (&r - rat(1, 8)) * (&r - int(2)) * (&r + rat(1, 12)) / pow(&r, 3);
            assert_eq!(g0, factored);
        }
    }

    #[test]
    fn gamma_full_expansion_of_quartic() {
        // the four higher coefficients of the full expansion
        let q = quartic();
        let r = rat(3, 1);
        let g = gamma_at(&q, &r).unwrap();
        let r2 = pow(&r, 2);
        let r3 = pow(&r, 3);
        let r4 = pow(&r, 4);
        assert_eq!(g[4], (int(-3) * &r3 + int(4) * &r2 + int(8)) / (int(2) * &r4));
        assert_eq!(g[3], -(int(2) * &r3 + int(9) * &r2 - int(52)) / (int(4) * &r3));
        assert_eq!(g[2], -(int(7) * &r4 + int(22) * &r3 - int(70) * &r2 - int(8)) / (int(4) * &r4));
        assert_eq!(g[1], -(int(-196) * &r4 + int(378) * &r3 + int(22) * &r2 + int(9) * &r + int(6)) / (int(4) * &r4));
    }

    #[test]
    fn gamma_small_cases() {
        let xy = Poly2::monomial(int(1), 1, 1);
        assert_eq!(gamma_at(&xy, &int(1)).unwrap(), vec![int(0), rat(1, 2), rat(1, 2)]);
        assert_eq!(gamma_at(&Poly2::constant(int(7)), &int(3)).unwrap(), vec![int(7)]);
        assert_eq!(gamma_at(&xy, &int(0)), Err(AlgebraError::ZeroRadius));
    }

    #[test]
    fn cleared_gamma_normalisation() {
        let g = gamma_cleared(&quartic()).unwrap();
        // -4 r (96 r^3 - 196 r^2 + 7 r + 2)
        assert_eq!(g[0], Poly1::from_ints(&[0, -8, -28, 784, -384]));
        let c = rat(3, 5);
        let y_minus_c = parse_poly("y - 3/5").unwrap();
        let g = gamma_cleared(&y_minus_c).unwrap();
        assert_eq!(g[0], Poly1::new(vec![int(1), -int(2) * &c]));
        let g = gamma_cleared(&Poly2::x()).unwrap();
        assert!(g[0].is_zero());
        assert_eq!(g[1], Poly1::from_ints(&[2]));
        assert_eq!(gamma_cleared(&Poly2::zero()), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn substitution_examples() {
        assert!(substitute_tube(&quartic(), &int(2), Epsilon::Plus).unwrap().is_zero());
        let sq = parse_poly(TWO_RADII).unwrap();
        assert_eq!(substitute_tube(&sq, &int(2), Epsilon::Plus).unwrap(), Poly1::from_ints(&[0, -3, 15]));
        let c = rat(7, 3);
        let q = parse_poly("y - 7/3").unwrap();
        assert_eq!(
            substitute_tube(&q, &(int(1) / (int(2) * &c)), Epsilon::Plus).unwrap(),
            Poly1::new(vec![int(0), rat(1, 2)])
        );
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_tube_ideal(&quartic(), &int(2), Epsilon::Plus).unwrap());
        assert!(!is_in_tube_ideal(&quartic(), &int(1), Epsilon::Plus).unwrap());
        assert!(is_in_tube_ideal(&Poly2::zero(), &rat(3, 4), Epsilon::Minus).unwrap());
        assert_eq!(is_in_tube_ideal(&quartic(), &int(0), Epsilon::Plus), Err(AlgebraError::ZeroRadius));
    }

    #[test]
    fn division_examples() {
        let quotient = divide_by_tube_factor(&quartic(), &int(2), Epsilon::Plus).unwrap().unwrap();
        assert_eq!(quotient, parse_poly("x^3 + x^2*y + 3*x*y^2 + 2*x^2 + 4*x*y + y^2 + 5*x + 2*y - 24").unwrap());
        let sq = parse_poly(TWO_RADII).unwrap();
        assert_eq!(divide_by_tube_factor(&sq, &int(5), Epsilon::Plus).unwrap(), Some(parse_poly("4*y - 1").unwrap()));
        assert_eq!(divide_by_tube_factor(&sq, &int(2), Epsilon::Plus).unwrap(), None);
        for eps in Epsilon::BOTH {
            let r = rat(-5, 3);
            let generator = Poly2::tube_generator(&r, eps);
            assert_eq!(divide_by_tube_factor(&generator, &r, eps).unwrap(), Some(Poly2::one()));
        }
    }

    #[test]
    fn epsilon_transform_examples() {
        let p = parse_poly("x + y + 1").unwrap();
        assert_eq!(epsilon_transform(&p, Epsilon::Minus), parse_poly("-x - y + 1").unwrap());
        assert_eq!(epsilon_transform(&quartic(), Epsilon::Plus), quartic());
        assert_eq!(epsilon_transform(&epsilon_transform(&quartic(), Epsilon::Minus), Epsilon::Minus), quartic());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_alternating_sum(0, 7, 3), BigInt::from(35));
        assert_eq!(binomial_alternating_sum(2, 5, 3), BigInt::from(3));
        // lower-index corner: x - n = -2, j - n = 2, generalised C(-2, 2) = 3
        assert_eq!(binomial_alternating_sum(4, 2, 6), BigInt::from(3));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(-1, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn sign_of_rationals() {
        assert_eq!(sign(&rat(-1, 3)), -1);
        assert_eq!(sign(&int(0)), 0);
        assert_eq!(sign(&rat(2, 9)), 1);
    }
}
