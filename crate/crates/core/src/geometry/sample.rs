//! Grid sampling of tubes, residuals of relations, and CSV dumps.

use std::io::{self, Write};

use rayon::prelude::*;

use super::tube::{curvatures, CurvatureSample, TubeSpec};
use super::GeometryError;
use crate::poly::Poly2;

pub const CSV_HEADER: &str = "s,t,K,H,K_cf,H_cf,xi,residual";

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// `n` equally spaced points of `[a, b)`, for periodic parameters.
pub fn periodic_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}

/// Grid points with `|xi|` below the regularity cutoff, as `(s, t, xi)`, in
/// row-major order.
pub fn regularity_scan(spec: &TubeSpec, s_grid: &[f64], t_grid: &[f64]) -> Result<Vec<(f64, f64, f64)>, GeometryError> {
    let mut out = Vec::new();
    for &s in s_grid {
        let frame = spec.curve().tube_frame(s)?;
        for &t in t_grid {
            let xi = spec.xi(&frame, t);
            if xi.abs() < super::REGULARITY_CUTOFF {
                out.push((s, t, xi));
            }
        }
    }
    Ok(out)
}

/// A regular grid point with the relation's residual `Q(K, H)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSample {
    pub curvature: CurvatureSample,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub max_residual: f64,
    pub argmax: (f64, f64),
    /// Regular points in row-major grid order.
    pub samples: Vec<GridSample>,
    pub irregular_points: usize,
}

/// Evaluates `Q(K, H)` at every regular grid point (in parallel, results in
/// row-major order) and reports the largest `|Q(K, H)|`.
pub fn verify_relation(
    q: &Poly2,
    spec: &TubeSpec,
    s_grid: &[f64],
    t_grid: &[f64],
) -> Result<Verification, GeometryError> {
    if q.is_zero() {
        return Err(GeometryError::InvalidParameter("the zero polynomial".into()));
    }
    let points: Vec<(f64, f64)> = s_grid.iter().flat_map(|&s| t_grid.iter().map(move |&t| (s, t))).collect();
    let evaluated: Vec<Option<GridSample>> = points
        .par_iter()
        .map(|&(s, t)| match curvatures(spec, s, t) {
            Ok(c) => Ok(Some(GridSample { curvature: c, residual: q.eval_f64(c.k, c.h) })),
            Err(GeometryError::IrregularPoint { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;
    let irregular_points = evaluated.iter().filter(|e| e.is_none()).count();
    let samples: Vec<GridSample> = evaluated.into_iter().flatten().collect();
    let worst = samples
        .iter()
        .fold(None::<&GridSample>, |best, x| match best {
            Some(b) if b.residual.abs() >= x.residual.abs() => Some(b),
            _ => Some(x),
        })
        .ok_or(GeometryError::NoRegularPoints)?;
    Ok(Verification {
        max_residual: worst.residual.abs(),
        argmax: (worst.curvature.s, worst.curvature.t),
        samples,
        irregular_points,
    })
}

/// Writes the samples as CSV with 17 significant digits.
pub fn write_csv<W: Write>(out: &mut W, samples: &[GridSample]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for x in samples {
        let c = &x.curvature;
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            c.s, c.t, c.k, c.h, c.k_cf, c.h_cf, c.xi, x.residual
        )?;
    }
    Ok(())
}
