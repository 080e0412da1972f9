//! Radius and star-radius sets of a polynomial relation.
//!
//! A right cylinder of radius `r` has curvatures `(K, H) = (0, eps/(2r))`, so
//! it satisfies `Q` exactly when `r` is a positive zero of the radius
//! polynomial built from the axis restriction `Q(0, y)`. A radius is a star
//! radius when `Q` lies in the ideal of the tube generator at that radius, in
//! which case every regular tube of that radius satisfies `Q`.
//!
//! Hyperbolic radii are represented by `rho = sinh r`; all exact work happens
//! in `rho` and `r = asinh(rho)` is only ever rendered numerically.

mod roots;

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{int, Epsilon, Poly1, Poly2, Rational};
use crate::polyalg::{self, epsilon_transform, gamma_cleared};

pub use roots::{isolate_positive_roots, mirror, rational_roots, sturm_count, sturm_sequence, AlgebraicRadius};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Euclidean,
    Lorentzian,
    Hyperbolic,
}

impl Space {
    pub const ALL: [Space; 3] = [Space::Euclidean, Space::Lorentzian, Space::Hyperbolic];

    pub fn name(self) -> &'static str {
        match self {
            Space::Euclidean => "euclidean",
            Space::Lorentzian => "lorentzian",
            Space::Hyperbolic => "hyperbolic",
        }
    }

    /// The tags of this space: both signals for Lorentzian, `+1` otherwise.
    pub fn tags(self) -> Vec<SpaceTag> {
        match self {
            Space::Lorentzian => Epsilon::BOTH.iter().map(|&e| SpaceTag::lorentzian(e)).collect(),
            Space::Euclidean => vec![SpaceTag::euclidean()],
            Space::Hyperbolic => vec![SpaceTag::hyperbolic()],
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ambient space together with the surface signal. Only Lorentzian tags may
/// carry `eps = -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceTag {
    space: Space,
    eps: Epsilon,
}

impl SpaceTag {
    pub fn euclidean() -> Self {
        SpaceTag { space: Space::Euclidean, eps: Epsilon::Plus }
    }

    pub fn lorentzian(eps: Epsilon) -> Self {
        SpaceTag { space: Space::Lorentzian, eps }
    }

    pub fn hyperbolic() -> Self {
        SpaceTag { space: Space::Hyperbolic, eps: Epsilon::Plus }
    }

    pub fn space(self) -> Space {
        self.space
    }

    pub fn eps(self) -> Epsilon {
        self.eps
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.space {
            Space::Lorentzian => write!(f, "lorentzian(eps={})", self.eps),
            s => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadiusError {
    #[error("the zero polynomial is not a Weingarten relation")]
    ZeroPolynomial,
    #[error("internal check failed: {0}")]
    InternalMismatch(String),
}

impl From<polyalg::AlgebraError> for RadiusError {
    fn from(e: polyalg::AlgebraError) -> Self {
        match e {
            polyalg::AlgebraError::ZeroPolynomial => RadiusError::ZeroPolynomial,
            other => RadiusError::InternalMismatch(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadiusKind {
    /// Every positive radius; happens iff `Q(0, y)` is identically zero.
    AllPositive,
    Finite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusEntry {
    pub radius: AlgebraicRadius,
    pub star: bool,
}

/// `Finite` sets list every radius. `AllPositive` sets list only the star
/// radii (each with `star = true`); the remaining positive reals are
/// cylinder-only radii.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusSet {
    pub kind: RadiusKind,
    pub entries: Vec<RadiusEntry>,
}

impl RadiusSet {
    pub fn is_empty(&self) -> bool {
        self.kind == RadiusKind::Finite && self.entries.is_empty()
    }

    pub fn stars(&self) -> impl Iterator<Item = &AlgebraicRadius> {
        self.entries.iter().filter(|e| e.star).map(|e| &e.radius)
    }
}

/// `q0(y) = Q(0, y)`.
pub fn axis_restriction(q: &Poly2) -> Poly1 {
    q.coefficients_in_x().into_iter().next().unwrap_or_default()
}

/// `sum_k c_k (s t)^(d - k)` for `p = sum_k c_k t^k` of degree `d`, i.e.
/// `(s t)^d p(1 / (s t))`.
fn reversed_scaled(p: &Poly1, s: &Rational) -> Poly1 {
    let d = p.degree().max(0) as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[d - k] = c * num_traits::pow(s.clone(), d - k);
    }
    Poly1::new(coeffs)
}

/// Polynomial in `r` (in `rho` for hyperbolic tags) whose positive roots form
/// the radius set:
/// `(2r)^d q0(eps / (2r))` for every tag, `d = deg q0`.
pub fn radius_polynomial(q: &Poly2, tag: SpaceTag) -> Poly1 {
    let q0 = axis_restriction(q);
    let q0 = match tag.eps {
        Epsilon::Plus => q0,
        Epsilon::Minus => mirror(&q0),
    };
    reversed_scaled(&q0, &int(2))
}

/// Polynomial in `r` whose positive roots form the principal radius set:
/// `r^d q0(1 / r)`.
pub fn principal_radius_polynomial(q: &Poly2) -> Poly1 {
    reversed_scaled(&axis_restriction(q), &Rational::one())
}

fn nonzero(q: &Poly2) -> Result<(), RadiusError> {
    if q.is_zero() {
        Err(RadiusError::ZeroPolynomial)
    } else {
        Ok(())
    }
}

fn finite_from_poly(p: &Poly1) -> Vec<RadiusEntry> {
    isolate_positive_roots(p)
        .unwrap_or_default()
        .into_iter()
        .map(|radius| RadiusEntry { radius, star: false })
        .collect()
}

/// The radius set for `tag`, without star flags.
pub fn radius_set(q: &Poly2, tag: SpaceTag) -> Result<RadiusSet, RadiusError> {
    nonzero(q)?;
    let p = radius_polynomial(q, tag);
    if p.is_zero() {
        return Ok(RadiusSet { kind: RadiusKind::AllPositive, entries: Vec::new() });
    }
    Ok(RadiusSet { kind: RadiusKind::Finite, entries: finite_from_poly(&p) })
}

/// Whether `r` (or `rho` for hyperbolic tags) is a root of every `g_k`
/// computed from `Q_eps`, i.e. whether `Q` lies in the generator's ideal.
fn is_star(q: &Poly2, radius: &AlgebraicRadius, eps: Epsilon) -> Result<bool, RadiusError> {
    let gs = gamma_cleared(&epsilon_transform(q, eps))?;
    let by_gcd = radius.is_root_of(&common_divisor(&gs));
    if let Some(r) = radius.exact_value() {
        let direct = polyalg::is_in_tube_ideal(q, r, eps)?;
        if direct != by_gcd {
            return Err(RadiusError::InternalMismatch(format!(
                "star test at r = {r}: substitution says {direct}, cleared coefficients say {by_gcd}"
            )));
        }
    }
    Ok(by_gcd)
}

fn common_divisor(polys: &[Poly1]) -> Poly1 {
    polys.iter().fold(Poly1::zero(), |acc, p| acc.gcd(p))
}

/// The radius set for `tag` with star flags. For `AllPositive` sets the
/// entries are the star radii, the common positive roots of every `g_k`.
pub fn star_radius_set(q: &Poly2, tag: SpaceTag) -> Result<RadiusSet, RadiusError> {
    let mut set = radius_set(q, tag)?;
    match set.kind {
        RadiusKind::Finite => {
            for entry in &mut set.entries {
                entry.star = is_star(q, &entry.radius, tag.eps)?;
            }
        }
        RadiusKind::AllPositive => {
            let gs = gamma_cleared(&epsilon_transform(q, tag.eps))?;
            let common = common_divisor(&gs);
            set.entries = finite_from_poly(&common).into_iter().map(|e| RadiusEntry { star: true, ..e }).collect();
            for entry in &set.entries {
                if !is_star(q, &entry.radius, tag.eps)? {
                    return Err(RadiusError::InternalMismatch(format!(
                        "common root {} of the cleared coefficients is not a star radius",
                        entry.radius
                    )));
                }
            }
        }
    }
    Ok(set)
}

/// Polynomials in `r` whose common positive roots are the radii with
/// `Q(x, 1/r) = 0` identically in `x`.
fn principal_star_polys(q: &Poly2) -> Vec<Poly1> {
    q.coefficients_in_x().iter().map(|h| reversed_scaled(h, &Rational::one())).collect()
}

/// The principal radius set, radii `r > 0` with `Q(0, 1/r) = 0`; star flags
/// mark `Q(x, 1/r) = 0` identically, i.e. `Q` in `<y - 1/r>`.
pub fn principal_radius_set(q: &Poly2) -> Result<RadiusSet, RadiusError> {
    nonzero(q)?;
    let p = principal_radius_polynomial(q);
    let common = common_divisor(&principal_star_polys(q));
    if p.is_zero() {
        let entries = finite_from_poly(&common).into_iter().map(|e| RadiusEntry { star: true, ..e }).collect();
        return Ok(RadiusSet { kind: RadiusKind::AllPositive, entries });
    }
    let mut entries = finite_from_poly(&p);
    for entry in &mut entries {
        entry.star = entry.radius.is_root_of(&common);
        if let Some(r) = entry.radius.exact_value() {
            let y = r.recip();
            let direct = q.coefficients_in_x().iter().all(|h| h.eval(&y).is_zero());
            if direct != entry.star {
                return Err(RadiusError::InternalMismatch(format!(
                    "principal star test at r = {r} disagrees with direct substitution"
                )));
            }
        }
    }
    Ok(RadiusSet { kind: RadiusKind::Finite, entries })
}

/// The geodesic radius `asinh(rho)` of a hyperbolic tube from `rho = sinh r`.
pub fn hyperbolic_radius(rho: &AlgebraicRadius) -> f64 {
    rho.to_f64().asinh()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, rat};

    const QUARTIC: &str =
        "4*x^4 + 8*x^2*y^2 - 12*x*y^3 + 9*x^3 + 9*x^2*y - 9*x*y^2 - 4*y^3 + 22*x^2 - 8*x*y - 7*y^2 - 91*x + 98*y - 24";
    const TWO_RADII: &str = "14*y - 25*x + 100*x*y - 40*y^2 - 1";

    fn summary(set: &RadiusSet) -> Vec<(Rational, bool)> {
        set.entries.iter().map(|e| (e.radius.exact_value().cloned().expect("rational"), e.star)).collect()
    }

    #[test]
    fn axis_restriction_examples() {
        let sq = parse_poly(TWO_RADII).unwrap();
        assert_eq!(axis_restriction(&sq), Poly1::from_ints(&[-1, 14, -40]));
        assert!(axis_restriction(&Poly2::x()).is_zero());
        assert_eq!(axis_restriction(&parse_poly("x - 3").unwrap()), Poly1::from_ints(&[-3]));
    }

    #[test]
    fn radius_polynomial_of_two_radii() {
        let sq = parse_poly(TWO_RADII).unwrap();
        // -4 (r - 2)(r - 5)
        assert_eq!(radius_polynomial(&sq, SpaceTag::euclidean()), Poly1::from_ints(&[-40, 28, -4]));
    }

    #[test]
    fn euclidean_example_sets() {
        let sq = parse_poly(TWO_RADII).unwrap();
        let set = star_radius_set(&sq, SpaceTag::euclidean()).unwrap();
        assert_eq!(summary(&set), vec![(int(2), false), (int(5), true)]);
        let q = parse_poly(QUARTIC).unwrap();
        let set = star_radius_set(&q, SpaceTag::euclidean()).unwrap();
        assert_eq!(summary(&set), vec![(rat(1, 8), false), (int(2), true)]);
        let set = radius_set(&q, SpaceTag::lorentzian(Epsilon::Plus)).unwrap();
        assert_eq!(summary(&set), vec![(rat(1, 8), false), (int(2), false)]);
    }

    #[test]
    fn linear_axis_cases() {
        let all = radius_set(&Poly2::x(), SpaceTag::euclidean()).unwrap();
        assert_eq!(all.kind, RadiusKind::AllPositive);
        assert!(!all.is_empty());
        assert!(radius_set(&parse_poly("x - 1").unwrap(), SpaceTag::euclidean()).unwrap().is_empty());
        let q = parse_poly("y + 3/4").unwrap();
        let set = radius_set(&q, SpaceTag::lorentzian(Epsilon::Minus)).unwrap();
        assert_eq!(summary(&set), vec![(rat(2, 3), false)]);
        assert!(radius_set(&q, SpaceTag::lorentzian(Epsilon::Plus)).unwrap().is_empty());
        assert_eq!(radius_set(&Poly2::zero(), SpaceTag::euclidean()), Err(RadiusError::ZeroPolynomial));
    }

    #[test]
    fn squared_generator_is_star() {
        let g = Poly2::tube_generator(&int(3), Epsilon::Plus);
        let set = star_radius_set(&g.pow(2), SpaceTag::euclidean()).unwrap();
        assert_eq!(summary(&set), vec![(int(3), true)]);
    }

    #[test]
    fn irrational_star_radius() {
        // (2 x - 2 sqrt2 y + 1)(2 x + 2 sqrt2 y + 1) has rational coefficients
        let q = parse_poly("(2*x + 1)^2 - 8*y^2").unwrap();
        let set = star_radius_set(&q, SpaceTag::euclidean()).unwrap();
        assert_eq!(set.entries.len(), 1);
        let entry = &set.entries[0];
        assert!(entry.star);
        assert!(entry.radius.exact_value().is_none());
        assert!((entry.radius.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-14);
        // x^2 + 2 x + 1 - 8 y^2: same sqrt 2 radius, but not a multiple
        let q = parse_poly("x^2 + 2*x + 1 - 8*y^2").unwrap();
        let set = star_radius_set(&q, SpaceTag::euclidean()).unwrap();
        assert_eq!(set.entries.len(), 1);
        assert!(!set.entries[0].star);
    }

    #[test]
    fn all_positive_reports_star_radii() {
        let q = &Poly2::x() * &Poly2::tube_generator(&rat(3, 2), Epsilon::Minus);
        let set = star_radius_set(&q, SpaceTag::lorentzian(Epsilon::Minus)).unwrap();
        assert_eq!(set.kind, RadiusKind::AllPositive);
        assert_eq!(summary(&set), vec![(rat(3, 2), true)]);
        let set = star_radius_set(&q, SpaceTag::lorentzian(Epsilon::Plus)).unwrap();
        assert_eq!(set.kind, RadiusKind::AllPositive);
        assert!(set.entries.is_empty());
    }

    #[test]
    fn principal_examples() {
        let set = principal_radius_set(&parse_poly("y - 4").unwrap()).unwrap();
        assert_eq!(summary(&set), vec![(rat(1, 4), true)]);
        let set = principal_radius_set(&parse_poly("2*x + 3*y - 6").unwrap()).unwrap();
        assert_eq!(summary(&set), vec![(rat(1, 2), false)]);
        let set = principal_radius_set(&parse_poly("x^2 + y - 2").unwrap()).unwrap();
        assert_eq!(summary(&set), vec![(rat(1, 2), false)]);
        let set = principal_radius_set(&parse_poly("x*y - 3*x").unwrap()).unwrap();
        assert_eq!(set.kind, RadiusKind::AllPositive);
        assert_eq!(summary(&set), vec![(rat(1, 3), true)]);
    }

    #[test]
    fn hyperbolic_radius_rendering() {
        let rho = AlgebraicRadius::rational(int(1));
        assert!((hyperbolic_radius(&rho) - 1f64.asinh()).abs() < 1e-15);
    }
}
