//! Command dispatch and JSON reports for the `weingarten` binary.
//!
//! Every command returns a [`ReportDocument`]; its JSON rendering is a pure
//! function of the arguments and the display precision.

mod report;
mod tube_arg;

use std::ffi::OsString;
use std::fs::File;
use std::io::BufWriter;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use weingarten::geometry::{periodic_grid, uniform_grid, verify_relation, write_csv, GeometryError};
use weingarten::radius::{radius_set, star_radius_set};
use weingarten::{
    classify_linear, classify_second_fundamental, divide_by_tube_factor, parse_poly, parse_poly_principal, solve_SQ,
    solve_SQ_principal, substitute_tube, AlgebraError, ClassifyError, Epsilon, ParseError, Poly2, RadiusError,
    Rational, Space,
};

pub use report::{
    ClassJson, ClassifyResult, DivideResult, LinearResult, LinearVerdictJson, RadiusEntryJson, RadiusJson,
    RadiusResult, RadiusSetJson, ReportDocument, SpaceJson, TubeJson, VerifyResult, SCHEMA_VERSION,
};
pub use tube_arg::{parse_tube_arg, TubeArg};

/// Significant digits of decimal renderings unless overridden.
pub const DEFAULT_PRECISION: usize = 12;
pub const PRECISION_VAR: &str = "WEINGARTEN_PRECISION";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse polynomial: {0}")]
    Syntax(#[from] ParseError),
    #[error("{0}")]
    Domain(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 for help/version output, 1 usage or syntax, 2 domain, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) if !e.use_stderr() => 0,
            CliError::Clap(_) | CliError::Usage(_) | CliError::Syntax(_) => 1,
            CliError::Domain(_) | CliError::Io(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::InternalMismatch(m) => CliError::Internal(m),
            e => CliError::Domain(e.to_string()),
        }
    }
}

impl From<RadiusError> for CliError {
    fn from(e: RadiusError) -> Self {
        ClassifyError::from(e).into()
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        ClassifyError::from(e).into()
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::InvalidParameter(m) => CliError::Usage(m),
            e => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "weingarten", version, about = "Classify polynomial Weingarten tubes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Euclidean,
    Lorentzian,
    Hyperbolic,
    All,
}

impl SpaceArg {
    fn spaces(self) -> Vec<Space> {
        match self {
            SpaceArg::Euclidean => vec![Space::Euclidean],
            SpaceArg::Lorentzian => vec![Space::Lorentzian],
            SpaceArg::Hyperbolic => vec![Space::Hyperbolic],
            SpaceArg::All => Space::ALL.to_vec(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SpaceArg::Euclidean => "euclidean",
            SpaceArg::Lorentzian => "lorentzian",
            SpaceArg::Hyperbolic => "hyperbolic",
            SpaceArg::All => "all",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tubes satisfying Q(K, H) = 0.
    Classify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "all")]
        space: SpaceArg,
        /// Read Q as a relation between the principal curvatures k1, k2
        /// (Euclidean only).
        #[arg(long)]
        principal: bool,
    },
    /// Radii r with Q(0, eps/(2r)) = 0.
    Radius {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value = "all")]
        space: SpaceArg,
        /// Mark the radii at which Q lies in the ideal of every tube.
        #[arg(long)]
        star: bool,
    },
    /// Divide Q by x r^2 - 2 r y + eps.
    Divide {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Radius as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        eps: String,
    },
    /// Evaluate Q(K, H) on a sampled built-in tube.
    Verify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Tube as `name:key=value,...`, e.g. `e3-torus:R=10,r=2`.
        #[arg(long)]
        tube: String,
        /// Sample counts in s and t, as `NxM`.
        #[arg(long, default_value = "64x64")]
        grid: String,
        /// Write the regular samples as CSV.
        #[arg(long)]
        csv: Option<String>,
    },
    /// The linear relation a K + b H = c.
    Linear {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value = "all")]
        space: SpaceArg,
    },
    /// Tubes whose second fundamental form has constant length c.
    Sff {
        c: String,
        #[arg(long, value_enum, default_value = "all")]
        space: SpaceArg,
    },
}

/// Reads the display precision from the environment value, if any.
pub fn precision_from(value: Option<&str>) -> Result<usize, CliError> {
    match value {
        None => Ok(DEFAULT_PRECISION),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(p) if (1..=17).contains(&p) => Ok(p),
            _ => Err(CliError::Usage(format!("{PRECISION_VAR} must be an integer in 1..=17, got {v:?}"))),
        },
    }
}

/// Parses an exact rational `n` or `p/q`. Decimals are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let t = text.trim();
    let ok = !t.is_empty() && t.chars().all(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+'));
    match t.trim_start_matches('+').parse::<Rational>() {
        Ok(v) if ok => Ok(v),
        _ => Err(CliError::Usage(format!("expected an exact rational n or p/q, got {text:?}"))),
    }
}

fn parse_eps(text: &str) -> Result<Epsilon, CliError> {
    match text.trim() {
        "1" | "+1" => Ok(Epsilon::Plus),
        "-1" => Ok(Epsilon::Minus),
        _ => Err(CliError::Usage(format!("eps must be +1 or -1, got {text:?}"))),
    }
}

fn parse_grid(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("grid must look like NxM with N, M >= 1, got {text:?}"));
    let (n, m) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    match (n.trim().parse::<usize>(), m.trim().parse::<usize>()) {
        (Ok(n), Ok(m)) if n > 0 && m > 0 => Ok((n, m)),
        _ => Err(bad()),
    }
}

fn nonzero(q: Poly2) -> Result<Poly2, CliError> {
    if q.is_zero() {
        Err(ClassifyError::ZeroPolynomial.into())
    } else {
        Ok(q)
    }
}

/// Runs one command line (including the program name) and returns the report.
pub fn run<I, T>(args: I, precision: usize) -> Result<ReportDocument, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let fmt = report::Decimal(precision);
    match cli.command {
        Command::Classify { poly, space, principal } => {
            let (q, report) = if principal {
                if space != SpaceArg::Euclidean && space != SpaceArg::All {
                    return Err(CliError::Usage("--principal is only defined for the Euclidean space".into()));
                }
                let q = nonzero(parse_poly_principal(&poly)?)?;
                let report = solve_SQ_principal(&q)?;
                (q, report)
            } else {
                let q = nonzero(parse_poly(&poly)?)?;
                let report = solve_SQ(&q, &space.spaces())?;
                (q, report)
            };
            let inputs = serde_json::json!({
                "poly": poly,
                "space": if principal { "euclidean" } else { space.name() },
                "principal": principal,
            });
            let result = ClassifyResult::new(&q, principal, &report, fmt);
            Ok(ReportDocument::new("classify", inputs, result))
        }
        Command::Radius { poly, space, star } => {
            let q = nonzero(parse_poly(&poly)?)?;
            let mut sets = Vec::new();
            for tag in space.spaces().into_iter().flat_map(Space::tags) {
                let set = if star { star_radius_set(&q, tag)? } else { radius_set(&q, tag)? };
                sets.push(RadiusSetJson::new(tag, &set, star, fmt));
            }
            let inputs = serde_json::json!({ "poly": poly, "space": space.name(), "star": star });
            let result = RadiusResult { polynomial: q.to_string(), sets };
            Ok(ReportDocument::new("radius", inputs, result))
        }
        Command::Divide { poly, r, eps } => {
            let q = nonzero(parse_poly(&poly)?)?;
            let radius = parse_rational(&r)?;
            if radius <= Rational::from_integer(0.into()) {
                return Err(ClassifyError::NonpositiveRadius.into());
            }
            let e = parse_eps(&eps)?;
            let substitution = substitute_tube(&q, &radius, e)?;
            let quotient = divide_by_tube_factor(&q, &radius, e)?;
            let inputs = serde_json::json!({ "poly": poly, "r": r, "eps": eps });
            let result = DivideResult::new(&q, &radius, e, &substitution, quotient.as_ref());
            Ok(ReportDocument::new("divide", inputs, result))
        }
        Command::Verify { poly, tube, grid, csv } => {
            let q = nonzero(parse_poly(&poly)?)?;
            let arg = parse_tube_arg(&tube)?;
            let spec = arg.spec()?;
            let (n, m) = parse_grid(&grid)?;
            let (s0, s1) = spec.curve().default_domain();
            let (t0, t1) = spec.default_t_range();
            let s_grid = periodic_grid(s0, s1, n);
            let t_grid = if t0 == 0.0 { periodic_grid(t0, t1, m) } else { uniform_grid(t0, t1, m) };
            let v = verify_relation(&q, &spec, &s_grid, &t_grid)?;
            if let Some(path) = &csv {
                let mut out = BufWriter::new(File::create(path)?);
                write_csv(&mut out, &v.samples)?;
            }
            let inputs = serde_json::json!({ "poly": poly, "tube": tube, "grid": grid, "csv": csv });
            let result = VerifyResult::new(&q, &arg, &spec, (n, m), &v, fmt);
            Ok(ReportDocument::new("verify", inputs, result))
        }
        Command::Linear { a, b, c, space } => {
            let (ra, rb, rc) = (parse_rational(&a)?, parse_rational(&b)?, parse_rational(&c)?);
            let verdicts = classify_linear(&ra, &rb, &rc, &space.spaces())?;
            let inputs = serde_json::json!({ "a": a, "b": b, "c": c, "space": space.name() });
            let result = LinearResult::new(&ra, &rb, &rc, &verdicts, fmt);
            Ok(ReportDocument::new("linear", inputs, result))
        }
        Command::Sff { c, space } => {
            let rc = parse_rational(&c)?;
            let report = classify_second_fundamental(&rc, &space.spaces())?;
            let inputs = serde_json::json!({ "c": c, "space": space.name() });
            let result = ClassifyResult::new(&report.input_poly, false, &report, fmt);
            Ok(ReportDocument::new("sff", inputs, result))
        }
    }
}
