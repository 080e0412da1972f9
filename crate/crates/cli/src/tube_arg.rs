//! `--tube name:key=value,...` arguments naming a built-in tube.

use std::collections::BTreeMap;

use weingarten::geometry::{CentralCurve, Section, TubeSpec};
use weingarten::poly::rational_to_f64;

use crate::{parse_rational, CliError};

/// Tube names, their required keys and their optional keys.
const TUBES: &[(&str, &[&str], &[&str])] = &[
    ("e3-cylinder", &["r"], &[]),
    ("e3-torus", &["R", "r"], &[]),
    ("e3-helix", &["a", "b", "r"], &[]),
    ("l3-spacelike-cylinder", &["r"], &["section", "delta"]),
    ("l3-timelike-cylinder", &["r"], &["section", "delta"]),
    ("l3-spacelike-helix", &["a", "b", "r"], &["section", "delta"]),
    ("l3-spacelike-helix-timelike-normal", &["a", "b", "r"], &["section", "delta"]),
    ("l3-timelike-helix", &["a", "b", "r"], &["section", "delta"]),
    ("h3-cylinder", &["r"], &[]),
    ("h3-circle", &["rho", "r"], &[]),
    ("h3-helix", &["rho", "alpha", "r"], &[]),
];

/// A parsed `--tube` argument. Numeric parameters are exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TubeArg {
    pub name: String,
    /// Parameter values as given, keyed by name.
    pub params: BTreeMap<String, String>,
}

/// Splits and validates `name:key=value,...`.
pub fn parse_tube_arg(text: &str) -> Result<TubeArg, CliError> {
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    let name = name.trim();
    let Some((_, required, optional)) = TUBES.iter().find(|(n, _, _)| *n == name) else {
        let known: Vec<&str> = TUBES.iter().map(|t| t.0).collect();
        return Err(CliError::Usage(format!("unknown tube {name:?}; known tubes: {}", known.join(", "))));
    };
    let mut params = BTreeMap::new();
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) =
            item.split_once('=').ok_or_else(|| CliError::Usage(format!("tube parameter {item:?} is not key=value")))?;
        let (k, v) = (k.trim(), v.trim());
        if !required.contains(&k) && !optional.contains(&k) {
            return Err(CliError::Usage(format!("tube {name} has no parameter {k:?}")));
        }
        if params.insert(k.to_string(), v.to_string()).is_some() {
            return Err(CliError::Usage(format!("tube parameter {k:?} given twice")));
        }
    }
    if let Some(k) = required.iter().find(|k| !params.contains_key(**k)) {
        return Err(CliError::Usage(format!("tube {name} needs parameter {k:?}")));
    }
    Ok(TubeArg { name: name.to_string(), params })
}

impl TubeArg {
    fn number(&self, key: &str) -> Result<f64, CliError> {
        let text = self.params.get(key).ok_or_else(|| CliError::Usage(format!("missing parameter {key:?}")))?;
        Ok(rational_to_f64(&parse_rational(text)?))
    }

    /// `circle` unless given.
    fn section(&self) -> Result<Section, CliError> {
        match self.params.get("section").map(String::as_str) {
            None | Some("circle") => Ok(Section::LorentzCircle),
            Some("hyperbola") => Ok(Section::LorentzHyperbola),
            Some(s) => Err(CliError::Usage(format!("section must be circle or hyperbola, got {s:?}"))),
        }
    }

    /// `+1` unless given.
    pub fn delta(&self) -> Result<f64, CliError> {
        match self.params.get("delta").map(String::as_str) {
            None | Some("1") | Some("+1") => Ok(1.0),
            Some("-1") => Ok(-1.0),
            Some(d) => Err(CliError::Usage(format!("delta must be +1 or -1, got {d:?}"))),
        }
    }

    pub fn spec(&self) -> Result<TubeSpec, CliError> {
        let r = self.number("r")?;
        let lorentz = |curve| Ok(TubeSpec::lorentzian(curve, r, self.section()?, self.delta()?)?);
        match self.name.as_str() {
            "e3-cylinder" => Ok(TubeSpec::new(CentralCurve::E3Line, r)?),
            "e3-torus" => Ok(TubeSpec::new(CentralCurve::E3Circle { radius: self.number("R")? }, r)?),
            "e3-helix" => Ok(TubeSpec::new(CentralCurve::E3Helix { a: self.number("a")?, b: self.number("b")? }, r)?),
            "l3-spacelike-cylinder" => lorentz(CentralCurve::L3SpacelikeGeodesic),
            "l3-timelike-cylinder" => lorentz(CentralCurve::L3TimelikeGeodesic),
            "l3-spacelike-helix" => {
                lorentz(CentralCurve::L3SpacelikeHelix { a: self.number("a")?, b: self.number("b")? })
            }
            "l3-spacelike-helix-timelike-normal" => {
                lorentz(CentralCurve::L3SpacelikeHelixTimelikeNormal { a: self.number("a")?, b: self.number("b")? })
            }
            "l3-timelike-helix" => {
                lorentz(CentralCurve::L3TimelikeHelix { a: self.number("a")?, b: self.number("b")? })
            }
            "h3-cylinder" => Ok(TubeSpec::new(CentralCurve::H3Geodesic, r)?),
            "h3-circle" => Ok(TubeSpec::new(CentralCurve::H3Circle { rho: self.number("rho")? }, r)?),
            "h3-helix" => {
                Ok(TubeSpec::new(CentralCurve::H3Helix { rho: self.number("rho")?, alpha: self.number("alpha")? }, r)?)
            }
            other => Err(CliError::Usage(format!("unknown tube {other:?}"))),
        }
    }
}
