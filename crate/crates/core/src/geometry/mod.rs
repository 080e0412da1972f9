//! Tubes in Euclidean, Lorentzian and hyperbolic space, sampled in double
//! precision to check the algebraic classification against actual surfaces.
//!
//! Vectors are `[f64; 4]`; three-dimensional ambients leave the last slot at
//! zero. The hyperbolic space is the upper sheet of `<x, x>_1 = -1` in
//! Minkowski 4-space.

mod curves;
mod sample;
mod tube;

use thiserror::Error;

pub use curves::{CentralCurve, FrenetFrame};
pub use sample::{
    periodic_grid, regularity_scan, uniform_grid, verify_relation, write_csv, GridSample, Verification, CSV_HEADER,
};
pub use tube::{
    curvatures, curvatures_finite_difference, fundamental_forms, generator_residual, tube_point, CurvatureSample,
    FundamentalForms, MuEta, Section, TubeSpec, REGULARITY_CUTOFF,
};

pub type Vector = [f64; 4];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("vectors of dimension {found} where {expected} was required")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the Frenet frame degenerates at s = {s}")]
    DegenerateFrame { s: f64 },
    #[error("the principal normal is lightlike at s = {s}")]
    LightlikeNormal { s: f64 },
    #[error("a timelike curve has no tube with hyperbolic sections")]
    InvalidSpecRow,
    #[error("the tube is not regular at (s, t) = ({s}, {t}): xi = {xi}")]
    IrregularPoint { s: f64, t: f64, xi: f64 },
    #[error("no regular point on the sampling grid")]
    NoRegularPoints,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// The ambient space with its inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `R^3` with the dot product.
    E3,
    /// `R^3` with `dx^2 + dy^2 - dz^2`.
    L3,
    /// The hyperboloid in `R^4` with `dx^2 + dy^2 + dz^2 - dw^2`.
    H3,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::E3 | Ambient::L3 => 3,
            Ambient::H3 => 4,
        }
    }

    pub fn inner(self, u: &Vector, v: &Vector) -> f64 {
        match self {
            Ambient::E3 => u[0] * v[0] + u[1] * v[1] + u[2] * v[2],
            Ambient::L3 => u[0] * v[0] + u[1] * v[1] - u[2] * v[2],
            Ambient::H3 => u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3],
        }
    }

    /// `sqrt |<v, v>|`.
    pub fn norm(self, v: &Vector) -> f64 {
        self.inner(v, v).abs().sqrt()
    }
}

/// `sum_{i < n} u_i v_i - u_n v_n` for vectors of length `n` in {3, 4}.
pub fn lorentz_inner(u: &[f64], v: &[f64]) -> Result<f64, GeometryError> {
    if u.len() != v.len() {
        return Err(GeometryError::DimensionMismatch { expected: u.len(), found: v.len() });
    }
    if !(3..=4).contains(&u.len()) {
        return Err(GeometryError::DimensionMismatch { expected: 3, found: u.len() });
    }
    let n = u.len() - 1;
    Ok(u[..n].iter().zip(&v[..n]).map(|(a, b)| a * b).sum::<f64>() - u[n] * v[n])
}

/// Lorentzian cross product of `n - 1` vectors of length `n` in {3, 4}: the
/// formal determinant with first row `(e_1, ..., e_{n-1}, -e_n)`.
pub fn lorentz_cross(vectors: &[&[f64]]) -> Result<Vec<f64>, GeometryError> {
    let n = vectors.len() + 1;
    if !(3..=4).contains(&n) {
        return Err(GeometryError::DimensionMismatch { expected: 3, found: n });
    }
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(GeometryError::DimensionMismatch { expected: n, found: v.len() });
    }
    let mut padded = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut p = [0.0; 4];
        p[..n].copy_from_slice(v);
        padded.push(p);
    }
    let out = match n {
        3 => cross_l3(&padded[0], &padded[1]),
        _ => cross_l4(&padded[0], &padded[1], &padded[2]),
    };
    Ok(out[..n].to_vec())
}

pub(crate) fn cross_e3(u: &Vector, v: &Vector) -> Vector {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0], 0.0]
}

pub(crate) fn cross_l3(u: &Vector, v: &Vector) -> Vector {
    let c = cross_e3(u, v);
    [c[0], c[1], -c[2], 0.0]
}

fn det3(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Cofactor expansion along the basis row `(e1, e2, e3, -e4)`.
pub(crate) fn cross_l4(u: &Vector, v: &Vector, w: &Vector) -> Vector {
    let minor = |skip: usize| {
        let pick = |x: &Vector| {
            let mut out = [0.0; 3];
            let mut k = 0;
            for (i, xi) in x.iter().enumerate() {
                if i != skip {
                    out[k] = *xi;
                    k += 1;
                }
            }
            out
        };
        det3(pick(u), pick(v), pick(w))
    };
    [minor(0), -minor(1), minor(2), minor(3)]
}

pub(crate) fn add(u: &Vector, v: &Vector) -> Vector {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]]
}

pub(crate) fn sub(u: &Vector, v: &Vector) -> Vector {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]]
}

pub(crate) fn scale(a: f64, v: &Vector) -> Vector {
    [a * v[0], a * v[1], a * v[2], a * v[3]]
}

/// `sum_i c_i x_i`.
pub(crate) fn combine(c: &[f64; 4], x: &[Vector; 4]) -> Vector {
    (0..4).fold([0.0; 4], |acc, i| add(&acc, &scale(c[i], &x[i])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_examples() {
        assert_eq!(lorentz_inner(&[0.0, 0.0, 1.0], &[0.0, 0.0, 1.0]).unwrap(), -1.0);
        assert_eq!(lorentz_inner(&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]).unwrap(), 0.0);
        assert_eq!(lorentz_inner(&[3.0, 4.0, 5.0], &[3.0, 4.0, 5.0]).unwrap(), 0.0);
        assert_eq!(lorentz_inner(&[0.0, 0.0, 0.0, 2.0], &[0.0, 0.0, 0.0, 2.0]).unwrap(), -4.0);
        assert!(matches!(lorentz_inner(&[1.0, 0.0, 0.0], &[1.0, 0.0]), Err(GeometryError::DimensionMismatch { .. })));
    }

    #[test]
    fn cross_product_conventions() {
        let e3 = lorentz_cross(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]]).unwrap();
        assert_eq!(e3, vec![0.0, 0.0, -1.0]);
        let parallel = lorentz_cross(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0]]).unwrap();
        assert_eq!(parallel, vec![0.0; 3]);
        let u = [0.3, -1.2, 0.7, 2.0];
        let v = [1.1, 0.4, -0.5, 0.2];
        let w = [-0.6, 0.9, 1.3, -0.8];
        let x = lorentz_cross(&[&u, &v, &w]).unwrap();
        for a in [&u, &v, &w] {
            assert!(lorentz_inner(&x, a).unwrap().abs() < 1e-12);
        }
        assert!(matches!(lorentz_cross(&[&[1.0, 0.0, 0.0]]), Err(GeometryError::DimensionMismatch { .. })));
    }
}
