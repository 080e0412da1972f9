//! Serializable report shapes. Field names are frozen by
//! `docs/report-schema.json`.

use serde::Serialize;
use serde_json::Value;
use weingarten::classify::{radius_value_f64, LinearCase, LinearVerdict};
use weingarten::geometry::{generator_residual, TubeSpec, Verification};
use weingarten::radius::{RadiusKind, RadiusSet};
use weingarten::{AlgebraicRadius, ClassKind, ClassificationReport, Epsilon, Poly1, Poly2, Rational, Space, SpaceTag};

use crate::tube_arg::TubeArg;

pub const SCHEMA_VERSION: &str = "1.0";

/// Renders floats in scientific notation with a fixed number of significant
/// digits.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Decimal(pub usize);

impl Decimal {
    fn show(self, v: f64) -> String {
        format!("{:.*e}", self.0.saturating_sub(1), v)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
}

impl ReportDocument {
    pub(crate) fn new<T: Serialize>(command: &str, inputs: Value, result: T) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            result: serde_json::to_value(result).expect("report types serialize"),
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceJson {
    pub space: String,
    pub eps: i64,
}

impl From<SpaceTag> for SpaceJson {
    fn from(tag: SpaceTag) -> Self {
        SpaceJson { space: tag.space().name().to_string(), eps: tag.eps().value() }
    }
}

/// A radius. Hyperbolic radii are exact in `rho = sinh r`; `approx` is
/// always the radius `r` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusJson {
    /// `"r"` or `"rho"`.
    pub variable: String,
    pub exact: Option<String>,
    /// Isolating interval `(lo, hi]` of an irrational value.
    pub interval: Option<[String; 2]>,
    pub defining_poly: String,
    pub approx: String,
}

impl RadiusJson {
    pub(crate) fn new(tag: SpaceTag, r: &AlgebraicRadius, fmt: Decimal) -> Self {
        let (lo, hi) = r.interval();
        RadiusJson {
            variable: if tag.space() == Space::Hyperbolic { "rho" } else { "r" }.to_string(),
            exact: r.exact_value().map(|v| v.to_string()),
            interval: (!r.is_rational()).then(|| [lo.to_string(), hi.to_string()]),
            defining_poly: r.defining_poly().to_string(),
            approx: fmt.show(radius_value_f64(tag, r)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub space: String,
    pub eps: i64,
    /// `"right_cylinders_only"` or `"all_regular_tubes"`.
    pub class: String,
    pub radius: RadiusJson,
    pub quotient: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyResult {
    pub polynomial: String,
    /// `"mean_gaussian"` or `"principal"`.
    pub variables: String,
    pub spaces: Vec<SpaceJson>,
    pub all_cylinders_any_radius: bool,
    pub classes: Vec<ClassJson>,
}

impl ClassifyResult {
    pub(crate) fn new(q: &Poly2, principal: bool, report: &ClassificationReport, fmt: Decimal) -> Self {
        let classes = report
            .classes
            .iter()
            .map(|c| ClassJson {
                space: c.tag.space().name().to_string(),
                eps: c.tag.eps().value(),
                class: match c.kind {
                    ClassKind::RightCylindersOnly => "right_cylinders_only",
                    ClassKind::AllRegularTubes => "all_regular_tubes",
                }
                .to_string(),
                radius: RadiusJson::new(c.tag, &c.radius, fmt),
                quotient: c.quotient_witness.as_ref().map(Poly2::to_string),
            })
            .collect();
        ClassifyResult {
            polynomial: q.to_string(),
            variables: if principal { "principal" } else { "mean_gaussian" }.to_string(),
            spaces: report.tags.iter().map(|&t| t.into()).collect(),
            all_cylinders_any_radius: report.all_cylinders_any_radius,
            classes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusEntryJson {
    pub radius: RadiusJson,
    /// Present only for `--star`.
    pub star: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusSetJson {
    pub space: String,
    pub eps: i64,
    /// `"all_positive"` or `"finite"`.
    pub kind: String,
    pub entries: Vec<RadiusEntryJson>,
}

impl RadiusSetJson {
    pub(crate) fn new(tag: SpaceTag, set: &RadiusSet, star: bool, fmt: Decimal) -> Self {
        RadiusSetJson {
            space: tag.space().name().to_string(),
            eps: tag.eps().value(),
            kind: match set.kind {
                RadiusKind::AllPositive => "all_positive",
                RadiusKind::Finite => "finite",
            }
            .to_string(),
            entries: set
                .entries
                .iter()
                .map(|e| RadiusEntryJson { radius: RadiusJson::new(tag, &e.radius, fmt), star: star.then_some(e.star) })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadiusResult {
    pub polynomial: String,
    pub sets: Vec<RadiusSetJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivideResult {
    pub polynomial: String,
    pub r: String,
    pub eps: i64,
    pub generator: String,
    /// `Q_eps(x / r, (x r + 1) / (2 r))` as a polynomial in `x`.
    pub substitution: String,
    /// `"divisible"` or `"not_in_ideal"`.
    pub status: String,
    pub quotient: Option<String>,
}

impl DivideResult {
    pub(crate) fn new(q: &Poly2, r: &Rational, eps: Epsilon, substitution: &Poly1, quotient: Option<&Poly2>) -> Self {
        let in_x = Poly2::from_terms(substitution.coeffs().iter().enumerate().map(|(i, c)| (i as u32, 0, c.clone())));
        DivideResult {
            polynomial: q.to_string(),
            r: r.to_string(),
            eps: eps.value(),
            generator: Poly2::tube_generator(r, eps).to_string(),
            substitution: in_x.to_string(),
            status: if quotient.is_some() { "divisible" } else { "not_in_ideal" }.to_string(),
            quotient: quotient.map(Poly2::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TubeJson {
    pub name: String,
    pub params: std::collections::BTreeMap<String, String>,
    /// `"E3"`, `"L3"` or `"H3"`.
    pub ambient: String,
    pub right_cylinder: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyResult {
    pub polynomial: String,
    pub tube: TubeJson,
    pub grid: [usize; 2],
    pub regular_points: usize,
    pub irregular_points: usize,
    /// Largest `|Q(K, H)|` over the regular points.
    pub max_residual: String,
    pub argmax: [String; 2],
    /// Largest residual of the space's generator relation.
    pub generator_max_residual: String,
    /// Largest `|v - v_cf| / (1 + |v_cf|)` over `v` in `{K, H}`.
    pub closed_form_max_deviation: String,
}

impl VerifyResult {
    pub(crate) fn new(
        q: &Poly2,
        arg: &TubeArg,
        spec: &TubeSpec,
        grid: (usize, usize),
        v: &Verification,
        fmt: Decimal,
    ) -> Self {
        let rel = |a: f64, b: f64| (a - b).abs() / (1.0 + b.abs());
        let (mut generator, mut deviation) = (0.0f64, 0.0f64);
        for x in &v.samples {
            let c = &x.curvature;
            generator = generator.max(generator_residual(spec, c.k, c.h, c.eps).abs());
            deviation = deviation.max(rel(c.k, c.k_cf)).max(rel(c.h, c.h_cf));
        }
        VerifyResult {
            polynomial: q.to_string(),
            tube: TubeJson {
                name: arg.name.clone(),
                params: arg.params.clone(),
                ambient: format!("{:?}", spec.ambient()),
                right_cylinder: spec.is_right_cylinder(),
            },
            grid: [grid.0, grid.1],
            regular_points: v.samples.len(),
            irregular_points: v.irregular_points,
            max_residual: fmt.show(v.max_residual),
            argmax: [fmt.show(v.argmax.0), fmt.show(v.argmax.1)],
            generator_max_residual: fmt.show(generator),
            closed_form_max_deviation: fmt.show(deviation),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearVerdictJson {
    pub space: String,
    pub eps: i64,
    /// `"cylinders_any_radius"`, `"all_tubes"`, `"cylinders_only"` or `"empty"`.
    pub case: String,
    pub radius: Option<RadiusJson>,
    pub delta: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearResult {
    pub polynomial: String,
    pub verdicts: Vec<LinearVerdictJson>,
}

impl LinearResult {
    pub(crate) fn new(a: &Rational, b: &Rational, c: &Rational, verdicts: &[LinearVerdict], fmt: Decimal) -> Self {
        let verdicts = verdicts
            .iter()
            .map(|v| {
                let (case, radius) = match &v.case {
                    LinearCase::CylindersAnyRadius => ("cylinders_any_radius", None),
                    LinearCase::AllTubes { radius } => ("all_tubes", Some(radius)),
                    LinearCase::CylindersOnly { radius } => ("cylinders_only", Some(radius)),
                    LinearCase::Empty => ("empty", None),
                };
                LinearVerdictJson {
                    space: v.tag.space().name().to_string(),
                    eps: v.tag.eps().value(),
                    case: case.to_string(),
                    radius: radius.map(|r| RadiusJson::new(v.tag, &AlgebraicRadius::rational(r.clone()), fmt)),
                    delta: v.delta.as_ref().map(Rational::to_string),
                }
            })
            .collect();
        LinearResult { polynomial: Poly2::linear(a.clone(), b.clone(), -c.clone()).to_string(), verdicts }
    }
}
