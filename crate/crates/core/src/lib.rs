//! Polynomial Weingarten relations `Q(K, H) = 0` satisfied by tubular
//! surfaces in Euclidean, Lorentzian and hyperbolic 3-space.
//!
//! [`polyalg`] decides membership in the ideal of a tube's linear relation,
//! [`radius`] finds the radii at which a relation can hold, [`classify`]
//! turns both into solution sets, and [`geometry`] samples actual tubes in
//! floating point.

pub mod classify;
pub mod geometry;
pub mod poly;
pub mod polyalg;
pub mod radius;

pub use classify::{
    classify_linear, classify_second_fundamental, solve_QS, solve_SQ, solve_SQ_principal, true_nonlinear_witness,
    ClassKind, ClassificationReport, ClassifyError, LinearCase, LinearVerdict, NonlinearVerdict, SurfaceClass,
    TubeIdentity, TubeRadius, TubeRelations,
};
pub use poly::{parse_poly, parse_poly_principal, Epsilon, Monomial, ParseError, Poly1, Poly2, Rational};
pub use polyalg::{divide_by_tube_factor, gamma_at, gamma_cleared, is_in_tube_ideal, substitute_tube, AlgebraError};
pub use radius::{AlgebraicRadius, RadiusEntry, RadiusError, RadiusKind, RadiusSet, Space, SpaceTag};
