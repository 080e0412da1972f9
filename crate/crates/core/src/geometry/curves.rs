//! Built-in unit-speed central curves with analytic derivatives, and their
//! Frenet frames.

use super::{cross_e3, cross_l3, cross_l4, scale, sub, Ambient, GeometryError, Vector};

const DEGENERACY: f64 = 1e-10;

/// A unit-speed curve given in closed form.
///
/// Lorentzian helices with parameters `a`, `b`:
/// spacelike normal `(a cos(s/c), a sin(s/c), b s/c)`, `c = sqrt(a^2 - b^2)`;
/// timelike normal `(b s/c, a sinh(s/c), a cosh(s/c))`, `c = sqrt(a^2 + b^2)`;
/// timelike curve `(a cos(s/c), a sin(s/c), b s/c)`, `c = sqrt(b^2 - a^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CentralCurve {
    E3Line,
    E3Circle {
        radius: f64,
    },
    E3Helix {
        a: f64,
        b: f64,
    },
    L3SpacelikeHelix {
        a: f64,
        b: f64,
    },
    L3SpacelikeHelixTimelikeNormal {
        a: f64,
        b: f64,
    },
    L3TimelikeHelix {
        a: f64,
        b: f64,
    },
    /// `(s, 0, 0)`, framed by `N = e2`, `B = -e3`.
    L3SpacelikeGeodesic,
    /// `(0, 0, s)`, framed by `N = e1`, `B = e2`.
    L3TimelikeGeodesic,
    /// `(sinh s, 0, 0, cosh s)`.
    H3Geodesic,
    /// Circle of hyperbolic radius `rho`; curvature `coth rho`.
    H3Circle {
        rho: f64,
    },
    /// `(sinh rho cos(alpha s), sinh rho sin(alpha s), cosh rho sinh(beta s), cosh rho cosh(beta s))`
    /// with `beta` fixed by unit speed; needs `alpha sinh rho < 1`.
    H3Helix {
        rho: f64,
        alpha: f64,
    },
}

/// Frenet frame at a point. `eps_*` are the causal characters
/// `<T,T>`, `<N,N>`, `<B,B>` (all `+1` outside Minkowski space).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame {
    pub position: Vector,
    pub t: Vector,
    pub n: Vector,
    pub b: Vector,
    pub kappa: f64,
    pub tau: f64,
    pub eps_t: f64,
    pub eps_n: f64,
    pub eps_b: f64,
}

impl FrenetFrame {
    /// Frenet matrix for the basis `(gamma, T, N, B)`: row `i` gives the
    /// derivative of basis vector `i`.
    pub fn matrix(&self, ambient: Ambient) -> [[f64; 4]; 4] {
        let (k, tau) = (self.kappa, self.tau);
        match ambient {
            Ambient::E3 => [[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, k, 0.0], [0.0, -k, 0.0, tau], [0.0, 0.0, -tau, 0.0]],
            Ambient::L3 => [
                [0.0, 1.0, 0.0, 0.0],
                [0.0, 0.0, k, 0.0],
                [0.0, -self.eps_t * self.eps_n * k, 0.0, tau],
                [0.0, 0.0, self.eps_t * tau, 0.0],
            ],
            Ambient::H3 => [[0.0, 1.0, 0.0, 0.0], [1.0, 0.0, k, 0.0], [0.0, -k, 0.0, tau], [0.0, 0.0, -tau, 0.0]],
        }
    }

    pub fn basis(&self) -> [Vector; 4] {
        [self.position, self.t, self.n, self.b]
    }
}

fn helix_speed(curve: &CentralCurve) -> f64 {
    match *curve {
        CentralCurve::E3Helix { a, b } => (a * a + b * b).sqrt(),
        CentralCurve::L3SpacelikeHelix { a, b } => (a * a - b * b).sqrt(),
        CentralCurve::L3SpacelikeHelixTimelikeNormal { a, b } => (a * a + b * b).sqrt(),
        CentralCurve::L3TimelikeHelix { a, b } => (b * b - a * a).sqrt(),
        _ => 1.0,
    }
}

impl CentralCurve {
    pub fn ambient(&self) -> Ambient {
        use CentralCurve::*;
        match self {
            E3Line | E3Circle { .. } | E3Helix { .. } => Ambient::E3,
            L3SpacelikeHelix { .. }
            | L3SpacelikeHelixTimelikeNormal { .. }
            | L3TimelikeHelix { .. }
            | L3SpacelikeGeodesic
            | L3TimelikeGeodesic => Ambient::L3,
            H3Geodesic | H3Circle { .. } | H3Helix { .. } => Ambient::H3,
        }
    }

    /// Checks the parameter constraints of the closed forms.
    pub fn validate(&self) -> Result<(), GeometryError> {
        use CentralCurve::*;
        let bad = |m: &str| Err(GeometryError::InvalidParameter(m.into()));
        match *self {
            E3Circle { radius } if radius.is_nan() || radius <= 0.0 => bad("circle radius must be positive"),
            E3Helix { a, b } if !(a > 0.0 && b.is_finite()) => bad("helix needs a > 0"),
            L3SpacelikeHelix { a, b } if !(a > 0.0 && b >= 0.0 && a > b) => bad("spacelike helix needs a > b >= 0"),
            L3SpacelikeHelixTimelikeNormal { a, b } if !(a > 0.0 && b.is_finite()) => bad("helix needs a > 0"),
            L3TimelikeHelix { a, b } if !(a > 0.0 && b > a) => bad("timelike helix needs b > a > 0"),
            H3Circle { rho } if rho.is_nan() || rho <= 0.0 => bad("circle radius must be positive"),
            H3Helix { rho, alpha } if !(rho > 0.0 && alpha > 0.0 && alpha * rho.sinh() < 1.0) => {
                bad("helix needs rho, alpha > 0 and alpha sinh rho < 1")
            }
            _ => Ok(()),
        }
    }

    /// Zero curvature: the tube over it is a right cylinder.
    pub fn is_geodesic(&self) -> bool {
        matches!(
            self,
            CentralCurve::E3Line
                | CentralCurve::L3SpacelikeGeodesic
                | CentralCurve::L3TimelikeGeodesic
                | CentralCurve::H3Geodesic
        )
    }

    /// `<T, T>`.
    pub fn eps_t(&self) -> f64 {
        match self {
            CentralCurve::L3TimelikeHelix { .. } | CentralCurve::L3TimelikeGeodesic => -1.0,
            _ => 1.0,
        }
    }

    /// Default sampling interval of the arc length: one period for closed or
    /// periodic curves.
    pub fn default_domain(&self) -> (f64, f64) {
        use std::f64::consts::TAU;
        match *self {
            CentralCurve::E3Circle { radius } => (0.0, TAU * radius),
            CentralCurve::E3Helix { .. }
            | CentralCurve::L3SpacelikeHelix { .. }
            | CentralCurve::L3TimelikeHelix { .. } => (0.0, TAU * helix_speed(self)),
            CentralCurve::H3Circle { rho } => (0.0, TAU * rho.sinh()),
            CentralCurve::H3Helix { alpha, .. } => (0.0, TAU / alpha),
            _ => (-1.0, 1.0),
        }
    }

    /// `gamma`, `gamma'`, `gamma''`, `gamma'''` at `s`.
    pub fn derivatives(&self, s: f64) -> [Vector; 4] {
        use CentralCurve::*;
        match *self {
            E3Line | L3TimelikeGeodesic => [[0.0, 0.0, s, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0; 4], [0.0; 4]],
            L3SpacelikeGeodesic => [[s, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0], [0.0; 4], [0.0; 4]],
            E3Circle { radius } => circular(radius, 1.0 / radius, 0.0, s),
            E3Helix { a, b } | L3SpacelikeHelix { a, b } | L3TimelikeHelix { a, b } => {
                let c = helix_speed(self);
                circular(a, 1.0 / c, b / c, s)
            }
            L3SpacelikeHelixTimelikeNormal { a, b } => {
                let c = helix_speed(self);
                let w = 1.0 / c;
                let (sh, ch) = ((w * s).sinh(), (w * s).cosh());
                [
                    [b * s / c, a * sh, a * ch, 0.0],
                    [b / c, a * w * ch, a * w * sh, 0.0],
                    [0.0, a * w * w * sh, a * w * w * ch, 0.0],
                    [0.0, a * w.powi(3) * ch, a * w.powi(3) * sh, 0.0],
                ]
            }
            H3Geodesic => {
                let (sh, ch) = (s.sinh(), s.cosh());
                [[sh, 0.0, 0.0, ch], [ch, 0.0, 0.0, sh], [sh, 0.0, 0.0, ch], [ch, 0.0, 0.0, sh]]
            }
            H3Circle { rho } => {
                let mut d = circular(rho.sinh(), 1.0 / rho.sinh(), 0.0, s);
                d[0][3] = rho.cosh();
                d
            }
            H3Helix { rho, alpha } => {
                let beta = ((1.0 - (alpha * rho.sinh()).powi(2)) / rho.cosh().powi(2)).sqrt();
                let (sa, ca) = ((alpha * s).sin(), (alpha * s).cos());
                let (sb, cb) = ((beta * s).sinh(), (beta * s).cosh());
                let (p, q) = (rho.sinh(), rho.cosh());
                [
                    [p * ca, p * sa, q * sb, q * cb],
                    [-p * alpha * sa, p * alpha * ca, q * beta * cb, q * beta * sb],
                    [-p * alpha.powi(2) * ca, -p * alpha.powi(2) * sa, q * beta.powi(2) * sb, q * beta.powi(2) * cb],
                    [p * alpha.powi(3) * sa, -p * alpha.powi(3) * ca, q * beta.powi(3) * cb, q * beta.powi(3) * sb],
                ]
            }
        }
    }

    /// Constant frame `(T, N, B)` of a geodesic, parallel along it.
    fn parallel_frame(&self, s: f64) -> Option<FrenetFrame> {
        let d = self.derivatives(s);
        let (n, b, eps_n, eps_b) = match self {
            CentralCurve::E3Line => ([1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], 1.0, 1.0),
            CentralCurve::L3SpacelikeGeodesic => ([0.0, 1.0, 0.0, 0.0], [0.0, 0.0, -1.0, 0.0], 1.0, -1.0),
            CentralCurve::L3TimelikeGeodesic => ([1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0], 1.0, 1.0),
            CentralCurve::H3Geodesic => ([0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], 1.0, 1.0),
            _ => return None,
        };
        Some(FrenetFrame { position: d[0], t: d[1], n, b, kappa: 0.0, tau: 0.0, eps_t: self.eps_t(), eps_n, eps_b })
    }

    /// The frame used to build the tube: the Frenet frame, or the parallel
    /// frame of a geodesic.
    pub fn tube_frame(&self, s: f64) -> Result<FrenetFrame, GeometryError> {
        match self.parallel_frame(s) {
            Some(frame) => Ok(frame),
            None => self.frenet_frame(s),
        }
    }

    /// The Frenet frame computed from the derivatives at `s`.
    ///
    /// In Minkowski space `tau = eps_B <N', B>`, so that
    /// `N' = -eps_T eps_N kappa T + tau B` and `B' = eps_T tau N` hold for
    /// every causal type.
    pub fn frenet_frame(&self, s: f64) -> Result<FrenetFrame, GeometryError> {
        let ambient = self.ambient();
        let [g, d1, d2, d3] = self.derivatives(s);
        // acceleration-like vector whose normalisation is N, and its derivative
        let (a, da) = match ambient {
            Ambient::H3 => (sub(&d2, &g), sub(&d3, &d1)),
            _ => (d2, d3),
        };
        let aa = ambient.inner(&a, &a);
        let euclidean_size = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        if euclidean_size < DEGENERACY {
            return Err(GeometryError::DegenerateFrame { s });
        }
        if aa.abs() < DEGENERACY * euclidean_size * euclidean_size {
            return Err(GeometryError::LightlikeNormal { s });
        }
        let kappa = aa.abs().sqrt();
        let eps_n = aa.signum();
        let eps_t = ambient.inner(&d1, &d1).signum();
        let n = scale(1.0 / kappa, &a);
        let (b, eps_b) = match ambient {
            Ambient::E3 => (cross_e3(&d1, &n), 1.0),
            Ambient::L3 => (cross_l3(&d1, &n), -eps_t * eps_n),
            Ambient::H3 => (cross_l4(&g, &d1, &n), 1.0),
        };
        let kappa_prime = eps_n * ambient.inner(&a, &da) / kappa;
        let n_prime = scale(1.0 / kappa, &sub(&da, &scale(kappa_prime / kappa, &a)));
        let tau = match ambient {
            Ambient::L3 => eps_b * ambient.inner(&n_prime, &b),
            _ => ambient.inner(&n_prime, &b),
        };
        Ok(FrenetFrame { position: g, t: d1, n, b, kappa, tau, eps_t, eps_n, eps_b })
    }
}

/// `(A cos(ws), A sin(ws), v s)` and its derivatives.
fn circular(amp: f64, w: f64, v: f64, s: f64) -> [Vector; 4] {
    let (sn, cs) = ((w * s).sin(), (w * s).cos());
    [
        [amp * cs, amp * sn, v * s, 0.0],
        [-amp * w * sn, amp * w * cs, v, 0.0],
        [-amp * w * w * cs, -amp * w * w * sn, 0.0, 0.0],
        [amp * w.powi(3) * sn, -amp * w.powi(3) * cs, 0.0, 0.0],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn euclidean_circle_frame() {
        let frame = CentralCurve::E3Circle { radius: 4.0 }.frenet_frame(1.3).unwrap();
        assert!(close(frame.kappa, 0.25, 1e-14));
        assert!(frame.tau.abs() < 1e-14);
    }

    #[test]
    fn euclidean_helix_curvature_and_torsion() {
        let (a, b) = (2.0, 1.0);
        let frame = CentralCurve::E3Helix { a, b }.frenet_frame(0.7).unwrap();
        assert!(close(frame.kappa, a / (a * a + b * b), 1e-14));
        assert!(close(frame.tau, b / (a * a + b * b), 1e-14));
    }

    #[test]
    fn lorentzian_helices() {
        let cases = [
            (CentralCurve::L3SpacelikeHelix { a: 2.0, b: 1.0 }, 1.0, 1.0, 2.0 / 3.0),
            (CentralCurve::L3SpacelikeHelixTimelikeNormal { a: 2.0, b: 1.0 }, 1.0, -1.0, 2.0 / 5.0),
            (CentralCurve::L3TimelikeHelix { a: 1.0, b: 2.0 }, -1.0, 1.0, 1.0 / 3.0),
        ];
        for (curve, eps_t, eps_n, kappa) in cases {
            let f = curve.frenet_frame(0.4).unwrap();
            assert_eq!((f.eps_t, f.eps_n, f.eps_b), (eps_t, eps_n, -eps_t * eps_n));
            assert!(close(f.kappa, kappa, 1e-14), "{curve:?}: {}", f.kappa);
            let l = Ambient::L3;
            assert!(close(l.inner(&f.t, &f.t), eps_t, 1e-12));
            assert!(close(l.inner(&f.n, &f.n), eps_n, 1e-12));
            assert!(close(l.inner(&f.b, &f.b), f.eps_b, 1e-12));
            for (u, v) in [(&f.t, &f.n), (&f.t, &f.b), (&f.n, &f.b)] {
                assert!(l.inner(u, v).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hyperbolic_frames() {
        let rho: f64 = 2.0;
        let f = CentralCurve::H3Circle { rho }.frenet_frame(0.9).unwrap();
        assert!(close(f.kappa, 1.0 / rho.tanh(), 1e-12));
        let h = Ambient::H3;
        assert!(close(h.inner(&f.position, &f.position), -1.0, 1e-12));
        for v in [&f.t, &f.n, &f.b] {
            assert!(close(h.inner(v, v), 1.0, 1e-12));
            assert!(h.inner(&f.position, v).abs() < 1e-12);
        }
        let f = CentralCurve::H3Helix { rho: 0.5, alpha: 1.0 }.frenet_frame(0.3).unwrap();
        assert!(close(h.inner(&f.t, &f.t), 1.0, 1e-12));
        assert!(f.tau.abs() > 1e-3);
    }

    #[test]
    fn geodesics_have_no_frenet_frame() {
        assert!(matches!(CentralCurve::H3Geodesic.frenet_frame(0.5), Err(GeometryError::DegenerateFrame { .. })));
        assert!(matches!(
            CentralCurve::L3SpacelikeGeodesic.frenet_frame(0.5),
            Err(GeometryError::DegenerateFrame { .. })
        ));
        let frame = CentralCurve::H3Geodesic.tube_frame(0.5).unwrap();
        assert_eq!(frame.kappa, 0.0);
    }

    #[test]
    fn parameter_validation() {
        assert!(CentralCurve::L3SpacelikeHelix { a: 1.0, b: 2.0 }.validate().is_err());
        assert!(CentralCurve::L3TimelikeHelix { a: 2.0, b: 1.0 }.validate().is_err());
        assert!(CentralCurve::H3Helix { rho: 2.0, alpha: 1.0 }.validate().is_err());
        assert!(CentralCurve::E3Circle { radius: 10.0 }.validate().is_ok());
    }
}
