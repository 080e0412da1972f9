//! Tube parametrisations and their Gaussian and mean curvatures.

use super::curves::{CentralCurve, FrenetFrame};
use super::{add, combine, scale, sub, Ambient, GeometryError, Vector};

/// Points with `|xi|` below this are treated as irregular.
pub const REGULARITY_CUTOFF: f64 = 1e-3;

/// Shape of the normal sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Section {
    EuclideanCircle,
    LorentzCircle,
    LorentzHyperbola,
    HyperbolicCircle,
}

/// The section coordinates `(mu, eta)` of a Lorentzian tube:
/// `Cos = (delta cos t, sin t)`, `Cosh = (delta cosh t, sinh t)`,
/// `Sinh = (sinh t, delta cosh t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MuEta {
    Cos,
    Cosh,
    Sinh,
}

/// A tube `psi(s, t)` of radius `r` around a built-in curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeSpec {
    curve: CentralCurve,
    radius: f64,
    section: Section,
    mu_eta: MuEta,
    delta: f64,
}

impl TubeSpec {
    /// Tube of radius `r` in `E^3` or `H^3`, according to the curve.
    pub fn new(curve: CentralCurve, radius: f64) -> Result<Self, GeometryError> {
        let section = match curve.ambient() {
            Ambient::E3 => Section::EuclideanCircle,
            Ambient::H3 => Section::HyperbolicCircle,
            Ambient::L3 => {
                return Err(GeometryError::InvalidParameter("Lorentzian tubes need a section type and delta".into()))
            }
        };
        Self::checked(curve, radius, section, MuEta::Cos, 1.0)
    }

    /// Lorentzian tube with the given section type and `delta = +-1`. The
    /// `(mu, eta)` pair follows from the causal characters of the curve; a
    /// timelike curve admits no hyperbolic sections.
    pub fn lorentzian(curve: CentralCurve, radius: f64, section: Section, delta: f64) -> Result<Self, GeometryError> {
        if curve.ambient() != Ambient::L3 {
            return Err(GeometryError::InvalidParameter("not a Lorentzian curve".into()));
        }
        if delta != 1.0 && delta != -1.0 {
            return Err(GeometryError::InvalidParameter("delta must be +1 or -1".into()));
        }
        curve.validate()?;
        let frame = curve.tube_frame(0.0)?;
        let mu_eta = match (frame.eps_t > 0.0, frame.eps_n > 0.0, section) {
            (false, _, Section::LorentzCircle) => MuEta::Cos,
            (false, _, Section::LorentzHyperbola) => return Err(GeometryError::InvalidSpecRow),
            (true, true, Section::LorentzCircle) | (true, false, Section::LorentzHyperbola) => MuEta::Cosh,
            (true, true, Section::LorentzHyperbola) | (true, false, Section::LorentzCircle) => MuEta::Sinh,
            _ => return Err(GeometryError::InvalidParameter("Lorentzian tubes need a Lorentzian section".into())),
        };
        Self::checked(curve, radius, section, mu_eta, delta)
    }

    fn checked(
        curve: CentralCurve,
        radius: f64,
        section: Section,
        mu_eta: MuEta,
        delta: f64,
    ) -> Result<Self, GeometryError> {
        curve.validate()?;
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeometryError::InvalidParameter("tube radius must be positive".into()));
        }
        Ok(TubeSpec { curve, radius, section, mu_eta, delta })
    }

    pub fn curve(&self) -> &CentralCurve {
        &self.curve
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn section(&self) -> Section {
        self.section
    }

    pub fn mu_eta(&self) -> MuEta {
        self.mu_eta
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn ambient(&self) -> Ambient {
        self.curve.ambient()
    }

    pub fn is_right_cylinder(&self) -> bool {
        self.curve.is_geodesic()
    }

    /// Default sampling interval of `t`: a full turn for circular sections,
    /// `[-2, 2]` for sections parametrised by hyperbolic functions.
    pub fn default_t_range(&self) -> (f64, f64) {
        match (self.section, self.mu_eta) {
            (Section::LorentzCircle | Section::LorentzHyperbola, MuEta::Cosh | MuEta::Sinh) => (-2.0, 2.0),
            _ => (0.0, std::f64::consts::TAU),
        }
    }

    /// `(mu, eta)`, their first and second `t`-derivatives.
    fn section_coords(&self, t: f64) -> [[f64; 2]; 3] {
        let d = self.delta;
        let (sn, cs, sh, ch) = (t.sin(), t.cos(), t.sinh(), t.cosh());
        match (self.ambient(), self.mu_eta) {
            (Ambient::L3, MuEta::Cos) => [[d * cs, sn], [-d * sn, cs], [-d * cs, -sn]],
            (Ambient::L3, MuEta::Cosh) => [[d * ch, sh], [d * sh, ch], [d * ch, sh]],
            (Ambient::L3, MuEta::Sinh) => [[sh, d * ch], [ch, d * sh], [sh, d * ch]],
            _ => [[cs, sn], [-sn, cs], [-cs, -sn]],
        }
    }

    /// Coefficients over `(gamma, T, N, B)` of `psi`, `psi_t`, `psi_tt` and
    /// the unit normal.
    fn coefficients(&self, t: f64) -> [[f64; 4]; 4] {
        let r = self.radius;
        match self.ambient() {
            Ambient::H3 => {
                let (sh, ch) = (r.sinh(), r.cosh());
                let (sn, cs) = (t.sin(), t.cos());
                [
                    [ch, 0.0, sh * cs, sh * sn],
                    [0.0, 0.0, -sh * sn, sh * cs],
                    [0.0, 0.0, -sh * cs, -sh * sn],
                    [-sh, 0.0, -ch * cs, -ch * sn],
                ]
            }
            _ => {
                let [[mu, eta], [mu1, eta1], [mu2, eta2]] = self.section_coords(t);
                [
                    [1.0, 0.0, r * mu, r * eta],
                    [0.0, 0.0, r * mu1, r * eta1],
                    [0.0, 0.0, r * mu2, r * eta2],
                    [0.0, 0.0, -mu, -eta],
                ]
            }
        }
    }

    /// Regularity function: `1 - r kappa cos t` in `E^3`,
    /// `1 + eps_B r kappa mu` in `L^3`, `cosh r - kappa cos t sinh r` in `H^3`.
    pub fn xi(&self, frame: &FrenetFrame, t: f64) -> f64 {
        let r = self.radius;
        match self.ambient() {
            Ambient::E3 => 1.0 - r * frame.kappa * t.cos(),
            Ambient::L3 => 1.0 + frame.eps_b * r * frame.kappa * self.section_coords(t)[0][0],
            Ambient::H3 => r.cosh() - frame.kappa * t.cos() * r.sinh(),
        }
    }

    /// The closed-form `(K, H)` and the signal.
    fn closed_form(&self, frame: &FrenetFrame, t: f64) -> (f64, f64, f64) {
        let r = self.radius;
        let k = frame.kappa;
        let xi = self.xi(frame, t);
        match self.ambient() {
            Ambient::E3 => {
                let c = k * t.cos();
                let den = r * (r * c - 1.0);
                (c / den, (2.0 * r * c - 1.0) / (2.0 * den), 1.0)
            }
            Ambient::L3 => {
                let [mu, eta] = self.section_coords(t)[0];
                let eps = (mu * mu * frame.eps_n + eta * eta * frame.eps_b).signum();
                let eb = frame.eps_b;
                (eps * eb * k * mu / (r * xi), eps * (2.0 * eb * r * k * mu + 1.0) / (2.0 * r * xi), eps)
            }
            Ambient::H3 => {
                let c = k * t.cos();
                (-c / (xi * r.sinh()), (r.cosh() - 2.0 * c * r.sinh()) / (2.0 * xi * r.sinh()), 1.0)
            }
        }
    }
}

/// `psi(s, t)`.
pub fn tube_point(spec: &TubeSpec, s: f64, t: f64) -> Result<Vector, GeometryError> {
    let frame = spec.curve.tube_frame(s)?;
    Ok(combine(&spec.coefficients(t)[0], &frame.basis()))
}

/// First and second fundamental forms at a point, with the signal
/// `eps = <N, N>` of the unit normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForms {
    pub e_first: f64,
    pub f_first: f64,
    pub g_first: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub eps: f64,
}

impl FundamentalForms {
    fn from_derivatives(ambient: Ambient, d: &[Vector; 5], normal: &Vector) -> Self {
        let [ps, pt, pss, pst, ptt] = d;
        let ip = |u: &Vector, v: &Vector| ambient.inner(u, v);
        FundamentalForms {
            e_first: ip(ps, ps),
            f_first: ip(ps, pt),
            g_first: ip(pt, pt),
            e: ip(pss, normal),
            f: ip(pst, normal),
            g: ip(ptt, normal),
            eps: ip(normal, normal).signum(),
        }
    }

    /// `K = eps (eg - f^2) / (EG - F^2)`.
    pub fn gaussian(&self) -> f64 {
        self.eps * (self.e * self.g - self.f * self.f) / self.det_first()
    }

    /// `H = eps (eG - 2fF + gE) / (2 (EG - F^2))`.
    pub fn mean(&self) -> f64 {
        self.eps * (self.e * self.g_first - 2.0 * self.f * self.f_first + self.g * self.e_first)
            / (2.0 * self.det_first())
    }

    pub fn det_first(&self) -> f64 {
        self.e_first * self.g_first - self.f_first * self.f_first
    }
}

/// One curvature sample: numerical `(K, H)` from the fundamental forms and
/// the closed forms `(K_cf, H_cf)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureSample {
    pub s: f64,
    pub t: f64,
    pub k: f64,
    pub h: f64,
    pub k_cf: f64,
    pub h_cf: f64,
    pub xi: f64,
    pub eps: f64,
}

fn mat_mul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn row_times(c: &[f64; 4], m: &[[f64; 4]; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (j, o) in out.iter_mut().enumerate() {
        *o = (0..4).map(|i| c[i] * m[i][j]).sum();
    }
    out
}

/// Fundamental forms from the frame: with `psi = c(t) X(s)` and
/// `X' = M X` (constant curvature and torsion along built-in curves),
/// `psi_s = c M X`, `psi_ss = c M^2 X`, `psi_st = c_t M X`.
pub fn fundamental_forms(spec: &TubeSpec, s: f64, t: f64) -> Result<FundamentalForms, GeometryError> {
    let frame = spec.curve.tube_frame(s)?;
    let ambient = spec.ambient();
    let m = frame.matrix(ambient);
    let m2 = mat_mul(&m, &m);
    let [c, ct, ctt, cn] = spec.coefficients(t);
    let x = frame.basis();
    let d = [
        combine(&row_times(&c, &m), &x),
        combine(&ct, &x),
        combine(&row_times(&c, &m2), &x),
        combine(&row_times(&ct, &m), &x),
        combine(&ctt, &x),
    ];
    Ok(FundamentalForms::from_derivatives(ambient, &d, &combine(&cn, &x)))
}

fn regular_frame(spec: &TubeSpec, s: f64, t: f64) -> Result<(FrenetFrame, f64), GeometryError> {
    let frame = spec.curve.tube_frame(s)?;
    let xi = spec.xi(&frame, t);
    if xi.abs() < REGULARITY_CUTOFF {
        return Err(GeometryError::IrregularPoint { s, t, xi });
    }
    Ok((frame, xi))
}

/// Curvatures at `(s, t)`; fails at irregular points.
pub fn curvatures(spec: &TubeSpec, s: f64, t: f64) -> Result<CurvatureSample, GeometryError> {
    let (frame, xi) = regular_frame(spec, s, t)?;
    let forms = fundamental_forms(spec, s, t)?;
    let (k_cf, h_cf, _) = spec.closed_form(&frame, t);
    Ok(CurvatureSample { s, t, k: forms.gaussian(), h: forms.mean(), k_cf, h_cf, xi, eps: forms.eps })
}

/// Curvatures from fourth-order central differences of `tube_point` with
/// step `h`; a cross-check of [`curvatures`].
pub fn curvatures_finite_difference(spec: &TubeSpec, s: f64, t: f64, h: f64) -> Result<CurvatureSample, GeometryError> {
    let (frame, xi) = regular_frame(spec, s, t)?;
    let p = |ds: f64, dt: f64| tube_point(spec, s + ds, t + dt);
    let first = |dir: (f64, f64)| -> Result<Vector, GeometryError> {
        let at = |k: f64| p(k * h * dir.0, k * h * dir.1);
        let num = add(&sub(&at(-2.0)?, &at(2.0)?), &scale(8.0, &sub(&at(1.0)?, &at(-1.0)?)));
        Ok(scale(1.0 / (12.0 * h), &num))
    };
    let second = |dir: (f64, f64)| -> Result<Vector, GeometryError> {
        let at = |k: f64| p(k * h * dir.0, k * h * dir.1);
        let num = add(
            &add(&scale(-1.0, &add(&at(2.0)?, &at(-2.0)?)), &scale(16.0, &add(&at(1.0)?, &at(-1.0)?))),
            &scale(-30.0, &at(0.0)?),
        );
        Ok(scale(1.0 / (12.0 * h * h), &num))
    };
    let ps = first((1.0, 0.0))?;
    let pt = first((0.0, 1.0))?;
    let pss = second((1.0, 0.0))?;
    let ptt = second((0.0, 1.0))?;
    // psi_st = (psi_uu - psi_vv) / 4 along u = s + t, v = s - t
    let pst = scale(0.25, &sub(&second((1.0, 1.0))?, &second((1.0, -1.0))?));
    let normal = combine(&spec.coefficients(t)[3], &frame.basis());
    let forms = FundamentalForms::from_derivatives(spec.ambient(), &[ps, pt, pss, pst, ptt], &normal);
    let (k_cf, h_cf, _) = spec.closed_form(&frame, t);
    Ok(CurvatureSample { s, t, k: forms.gaussian(), h: forms.mean(), k_cf, h_cf, xi, eps: forms.eps })
}

/// The generator relation evaluated at `(K, H)`:
/// `K r^2 - 2 r H + eps`, or `K sinh^2 r - 2 H sinh r + 1` in `H^3`.
pub fn generator_residual(spec: &TubeSpec, k: f64, h: f64, eps: f64) -> f64 {
    let r = match spec.ambient() {
        Ambient::H3 => spec.radius.sinh(),
        _ => spec.radius,
    };
    k * r * r - 2.0 * r * h + eps
}
