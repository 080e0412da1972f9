//! Tubes satisfying a given relation, and relations satisfied by a given tube.
//!
//! For a nonzero `Q`, a tube of radius `r` with signal `eps` satisfies
//! `Q(K, H) = 0` in two ways only: `r` is a star radius and then every
//! regular tube of radius `r` does, or `r` is a plain radius and only the
//! right cylinders (geodesic central curve) do.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::poly::{int, Epsilon, Poly1, Poly2, Rational};
use crate::polyalg::{self, divide_by_tube_factor, epsilon_transform, gamma_cleared};
use crate::radius::{
    self, axis_restriction, principal_radius_set, radius_polynomial, star_radius_set, AlgebraicRadius, RadiusError,
    RadiusKind, Space, SpaceTag,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the zero polynomial is not a Weingarten relation")]
    ZeroPolynomial,
    #[error("the tube radius must be positive")]
    NonpositiveRadius,
    #[error("the length of the second fundamental form must be positive")]
    NonpositiveLength,
    #[error("a x + b y - c with a = b = 0 is not a relation between K and H")]
    DegenerateRelation,
    #[error("the polynomial does not vanish on the tube")]
    NotMember,
    #[error("the polynomial has degree at most one")]
    LinearInput,
    #[error("internal check failed: {0}")]
    InternalMismatch(String),
}

impl From<RadiusError> for ClassifyError {
    fn from(e: RadiusError) -> Self {
        match e {
            RadiusError::ZeroPolynomial => ClassifyError::ZeroPolynomial,
            RadiusError::InternalMismatch(m) => ClassifyError::InternalMismatch(m),
        }
    }
}

impl From<polyalg::AlgebraError> for ClassifyError {
    fn from(e: polyalg::AlgebraError) -> Self {
        RadiusError::from(e).into()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    RightCylindersOnly,
    AllRegularTubes,
}

/// One family of solutions. Hyperbolic radii are given as `rho = sinh r`.
/// `quotient_witness` is present iff `kind` is `AllRegularTubes` and the
/// radius is rational; then generator times witness equals `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceClass {
    pub kind: ClassKind,
    pub tag: SpaceTag,
    pub radius: AlgebraicRadius,
    pub quotient_witness: Option<Poly2>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub tags: Vec<SpaceTag>,
    pub input_poly: Poly2,
    pub classes: Vec<SurfaceClass>,
    /// Right cylinders of every radius satisfy `Q` (`Q(0, y)` vanishes).
    pub all_cylinders_any_radius: bool,
}

impl ClassificationReport {
    pub fn classes_for(&self, tag: SpaceTag) -> impl Iterator<Item = &SurfaceClass> {
        self.classes.iter().filter(move |c| c.tag == tag)
    }

    /// No tube of any requested space satisfies `Q`.
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && !self.all_cylinders_any_radius
    }
}

fn nonzero(q: &Poly2) -> Result<(), ClassifyError> {
    if q.is_zero() {
        Err(ClassifyError::ZeroPolynomial)
    } else {
        Ok(())
    }
}

fn dedup_spaces(spaces: &[Space]) -> Vec<Space> {
    let mut spaces = spaces.to_vec();
    spaces.sort();
    spaces.dedup();
    spaces
}

/// The tubes satisfying `Q` in each requested space; Lorentzian always
/// covers both signals.
#[allow(non_snake_case)]
pub fn solve_SQ(q: &Poly2, spaces: &[Space]) -> Result<ClassificationReport, ClassifyError> {
    nonzero(q)?;
    let tags: Vec<SpaceTag> = dedup_spaces(spaces).into_iter().flat_map(Space::tags).collect();
    let mut classes = Vec::new();
    let mut all_cylinders = false;
    for &tag in &tags {
        let set = star_radius_set(q, tag)?;
        all_cylinders |= set.kind == RadiusKind::AllPositive;
        for entry in set.entries {
            let quotient_witness = match (entry.star, entry.radius.exact_value()) {
                (true, Some(r)) => Some(
                    divide_by_tube_factor(q, r, tag.eps())?
                        .ok_or_else(|| ClassifyError::InternalMismatch(format!("star radius {r} has no cofactor")))?,
                ),
                _ => None,
            };
            classes.push(SurfaceClass {
                kind: if entry.star { ClassKind::AllRegularTubes } else { ClassKind::RightCylindersOnly },
                tag,
                radius: entry.radius,
                quotient_witness,
            });
        }
    }
    Ok(ClassificationReport { tags, input_poly: q.clone(), classes, all_cylinders_any_radius: all_cylinders })
}

/// `Q` with `(x, y)` read as the principal curvatures `(k1, k2)`, `k2 = 1/r`
/// along the tube. Witnesses are cofactors of `y - 1/r`.
#[allow(non_snake_case)]
pub fn solve_SQ_principal(q: &Poly2) -> Result<ClassificationReport, ClassifyError> {
    nonzero(q)?;
    let tag = SpaceTag::euclidean();
    let set = principal_radius_set(q)?;
    let mut classes = Vec::new();
    for entry in set.entries {
        let quotient_witness = match (entry.star, entry.radius.exact_value()) {
            (true, Some(r)) => Some(divide_by_principal_factor(q, &r.recip())?),
            _ => None,
        };
        classes.push(SurfaceClass {
            kind: if entry.star { ClassKind::AllRegularTubes } else { ClassKind::RightCylindersOnly },
            tag,
            radius: entry.radius,
            quotient_witness,
        });
    }
    Ok(ClassificationReport {
        tags: vec![tag],
        input_poly: q.clone(),
        classes,
        all_cylinders_any_radius: set.kind == RadiusKind::AllPositive,
    })
}

/// `R` with `Q = (y - c) R`; each `x^i` coefficient is divided by `y - c`.
fn divide_by_principal_factor(q: &Poly2, c: &Rational) -> Result<Poly2, ClassifyError> {
    let factor = Poly1::linear_root(c.clone());
    let mut terms = Vec::new();
    for (i, h) in q.coefficients_in_x().iter().enumerate() {
        let (quot, rem) = h.div_rem(&factor);
        if !rem.is_zero() {
            return Err(ClassifyError::InternalMismatch(format!("y - {c} does not divide {q}")));
        }
        terms.extend(quot.coeffs().iter().enumerate().map(|(j, a)| (i as u32, j as u32, a.clone())));
    }
    let quotient = Poly2::from_terms(terms);
    let generator = &Poly2::y() - &Poly2::constant(c.clone());
    if &generator * &quotient != *q {
        return Err(ClassifyError::InternalMismatch(format!("({generator}) * ({quotient}) != {q}")));
    }
    Ok(quotient)
}

/// Radius of a fixed tube: exact rational, or a real algebraic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TubeRadius {
    Rational(Rational),
    Algebraic(AlgebraicRadius),
}

impl TubeRadius {
    fn algebraic(&self) -> AlgebraicRadius {
        match self {
            TubeRadius::Rational(r) => AlgebraicRadius::rational(r.clone()),
            TubeRadius::Algebraic(a) => a.clone(),
        }
    }

    fn is_positive(&self) -> bool {
        match self {
            TubeRadius::Rational(r) => r.is_positive(),
            TubeRadius::Algebraic(_) => true,
        }
    }
}

/// A fixed tube. Hyperbolic radii are given as `rho = sinh r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeIdentity {
    pub tag: SpaceTag,
    pub radius: TubeRadius,
    pub is_right_cylinder: bool,
}

/// The relations satisfied by a fixed tube: the ideal of the generator for a
/// tube with curved centre, a radius condition for a right cylinder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TubeRelations {
    /// Multiples of `x r^2 - 2 r y + eps`; `generator` is present when `r`
    /// is rational.
    Ideal { radius: AlgebraicRadius, eps: Epsilon, generator: Option<Poly2> },
    /// Polynomials with `r` in their radius set.
    CylinderRadius { radius: AlgebraicRadius, tag: SpaceTag },
}

impl TubeRelations {
    /// Whether `Q(K, H) = 0` holds on the tube. The zero polynomial always
    /// does.
    pub fn contains(&self, q: &Poly2) -> Result<bool, ClassifyError> {
        if q.is_zero() {
            return Ok(true);
        }
        match self {
            TubeRelations::Ideal { radius, eps, .. } => match radius.exact_value() {
                Some(r) => Ok(polyalg::is_in_tube_ideal(q, r, *eps)?),
                None => {
                    let gs = gamma_cleared(&epsilon_transform(q, *eps))?;
                    Ok(gs.iter().all(|g| radius.is_root_of(g)))
                }
            },
            TubeRelations::CylinderRadius { radius, tag } => {
                let p = radius_polynomial(q, *tag);
                let on_axis = radius.is_root_of(&p);
                if let Some(r) = radius.exact_value() {
                    let target = tag.eps().as_rational() / (int(2) * r);
                    let direct = axis_restriction(q).eval(&target).is_zero();
                    if direct != on_axis {
                        return Err(ClassifyError::InternalMismatch(format!(
                            "radius test at r = {r} disagrees with the axis restriction"
                        )));
                    }
                }
                Ok(on_axis)
            }
        }
    }

    /// The generator, for a curved tube of rational radius.
    pub fn generator(&self) -> Option<&Poly2> {
        match self {
            TubeRelations::Ideal { generator, .. } => generator.as_ref(),
            TubeRelations::CylinderRadius { .. } => None,
        }
    }
}

/// The relations `Q` with `Q(K, H) = 0` on the tube `s`.
#[allow(non_snake_case)]
pub fn solve_QS(s: &TubeIdentity) -> Result<TubeRelations, ClassifyError> {
    if !s.radius.is_positive() {
        return Err(ClassifyError::NonpositiveRadius);
    }
    let radius = s.radius.algebraic();
    if s.is_right_cylinder {
        return Ok(TubeRelations::CylinderRadius { radius, tag: s.tag });
    }
    let generator = radius.exact_value().map(|r| Poly2::tube_generator(r, s.tag.eps()));
    Ok(TubeRelations::Ideal { radius, eps: s.tag.eps(), generator })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonlinearVerdict {
    /// `Q` is divisible by the degree-one generator (`None` when the radius
    /// is irrational), so it is not a true nonlinear relation.
    NotTrue { witness: Option<Poly2>, quotient: Option<Poly2> },
    /// Right cylinder: deciding needs a bivariate factorisation, which is
    /// not attempted.
    CylinderCase,
}

/// Decides whether a nonlinear `Q` satisfied by `s` is a true nonlinear
/// relation, where that can be settled without factorising.
pub fn true_nonlinear_witness(q: &Poly2, s: &TubeIdentity) -> Result<NonlinearVerdict, ClassifyError> {
    if q.degree() <= 1 {
        return Err(ClassifyError::LinearInput);
    }
    let relations = solve_QS(s)?;
    if !relations.contains(q)? {
        return Err(ClassifyError::NotMember);
    }
    match relations {
        TubeRelations::CylinderRadius { .. } => Ok(NonlinearVerdict::CylinderCase),
        TubeRelations::Ideal { radius, eps, generator } => {
            let quotient = match radius.exact_value() {
                Some(r) => divide_by_tube_factor(q, r, eps)?,
                None => None,
            };
            Ok(NonlinearVerdict::NotTrue { witness: generator, quotient })
        }
    }
}

/// Case of the linear relation `a x + b y - c = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearCase {
    CylindersAnyRadius,
    AllTubes { radius: Rational },
    CylindersOnly { radius: Rational },
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearVerdict {
    pub tag: SpaceTag,
    pub case: LinearCase,
    /// `eps b^2 + 4 a c` when the radius exists.
    pub delta: Option<Rational>,
}

/// Classifies `a x + b y - c = 0` by the closed-form corollaries: with
/// `eps = sgn(bc)` (always `+1` for Euclidean and hyperbolic tags), a radius
/// exists iff `eps b c > 0`, equals `eps b / (2c)` (as `rho` for hyperbolic),
/// and every tube of it satisfies the relation iff `Delta = eps b^2 + 4ac`
/// vanishes. `b = c = 0` gives cylinders of any radius.
pub fn classify_linear(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    spaces: &[Space],
) -> Result<Vec<LinearVerdict>, ClassifyError> {
    if a.is_zero() && b.is_zero() {
        return Err(ClassifyError::DegenerateRelation);
    }
    let verdicts = dedup_spaces(spaces)
        .into_iter()
        .flat_map(Space::tags)
        .map(|tag| {
            if b.is_zero() && c.is_zero() {
                return LinearVerdict { tag, case: LinearCase::CylindersAnyRadius, delta: None };
            }
            let eps = tag.eps().as_rational();
            if !(&eps * b * c).is_positive() {
                return LinearVerdict { tag, case: LinearCase::Empty, delta: None };
            }
            let delta = &eps * b * b + int(4) * a * c;
            let radius = &eps * b / (int(2) * c);
            let case =
                if delta.is_zero() { LinearCase::AllTubes { radius } } else { LinearCase::CylindersOnly { radius } };
            LinearVerdict { tag, case, delta: Some(delta) }
        })
        .collect();
    Ok(verdicts)
}

/// Tubes with second fundamental form of constant length `c`, the relation
/// `-2x + 4y^2 - c^2 = 0`.
pub fn classify_second_fundamental(c: &Rational, spaces: &[Space]) -> Result<ClassificationReport, ClassifyError> {
    if !c.is_positive() {
        return Err(ClassifyError::NonpositiveLength);
    }
    solve_SQ(&second_fundamental_relation(c), spaces)
}

/// `-2x + 4y^2 - c^2`.
pub fn second_fundamental_relation(c: &Rational) -> Poly2 {
    Poly2::from_terms([(1, 0, int(-2)), (0, 2, int(4)), (0, 0, -(c * c))])
}

/// The radius of `tag` in the representation used by reports: `r` itself,
/// or `asinh(rho)` numerically for hyperbolic tags.
pub fn radius_value_f64(tag: SpaceTag, radius: &AlgebraicRadius) -> f64 {
    match tag.space() {
        Space::Hyperbolic => radius::hyperbolic_radius(radius),
        _ => radius.to_f64(),
    }
}
