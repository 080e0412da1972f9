use std::process::{Command, Output};

use serde_json::Value;

const QUARTIC: &str =
    "4*x^4 + 8*x^2*y^2 - 12*x*y^3 + 9*x^3 + 9*x^2*y - 9*x*y^2 - 4*y^3 + 22*x^2 - 8*x*y - 7*y^2 - 91*x + 98*y - 24";
const TWO_RADII: &str = "14*y-25*x+100*x*y-40*y^2-1";

fn exe(args: &[&str], precision: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weingarten"));
    cmd.args(args).env_remove("WEINGARTEN_PRECISION");
    if let Some(p) = precision {
        cmd.env("WEINGARTEN_PRECISION", p);
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = exe(args, None);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn classes(doc: &Value) -> Vec<(String, String, Option<String>)> {
    doc["result"]["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["radius"]["exact"].as_str().unwrap().to_string(),
                c["class"].as_str().unwrap().to_string(),
                c["quotient"].as_str().map(str::to_string),
            )
        })
        .collect()
}

fn exacts(set: &Value) -> Vec<&str> {
    set["entries"].as_array().unwrap().iter().map(|e| e["radius"]["exact"].as_str().unwrap()).collect()
}

fn decimal(v: &Value) -> f64 {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn classify_examples() {
    let doc = json(&["classify", TWO_RADII, "--space", "euclidean"]);
    assert_eq!(
        classes(&doc),
        vec![
            ("2".into(), "right_cylinders_only".into(), None),
            ("5".into(), "all_regular_tubes".into(), Some("4*y - 1".into())),
        ]
    );
    let doc = json(&["classify", "y - 1", "--space", "euclidean"]);
    assert_eq!(classes(&doc), vec![("1/2".into(), "right_cylinders_only".into(), None)]);
    let doc = json(&["classify", "x", "--space", "euclidean"]);
    assert_eq!(doc["result"]["all_cylinders_any_radius"], Value::Bool(true));
    assert!(classes(&doc).is_empty());
    let doc = json(&["classify", "y + 1", "--space", "euclidean"]);
    assert!(classes(&doc).is_empty());
}

#[test]
fn classify_all_spaces_lists_both_signals() {
    let doc = json(&["classify", "y - 1"]);
    let tags: Vec<(String, i64)> = doc["result"]["spaces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["space"].as_str().unwrap().to_string(), t["eps"].as_i64().unwrap()))
        .collect();
    assert_eq!(
        tags,
        vec![("euclidean".into(), 1), ("lorentzian".into(), -1), ("lorentzian".into(), 1), ("hyperbolic".into(), 1),]
    );
    let hyper = doc["result"]["classes"].as_array().unwrap().iter().find(|c| c["space"] == "hyperbolic").unwrap();
    assert_eq!(hyper["radius"]["variable"], "rho");
    assert_eq!(hyper["radius"]["exact"], "1/2");
    assert!((decimal(&hyper["radius"]["approx"]) - 0.5f64.asinh()).abs() < 1e-11);
}

#[test]
fn classify_principal() {
    // k2 = 1/r on every tube; k2 - 1/2 holds on all tubes of radius 2
    let doc = json(&["classify", "k2 - 1/2", "--principal"]);
    assert_eq!(doc["result"]["variables"], "principal");
    let c = classes(&doc);
    assert_eq!(c.len(), 1);
    assert_eq!((c[0].0.as_str(), c[0].1.as_str()), ("2", "all_regular_tubes"));
    let out = exe(&["classify", "k1", "--principal", "--space", "lorentzian"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn radius_examples() {
    let doc = json(&["radius", QUARTIC, "--space", "lorentzian"]);
    let sets = doc["result"]["sets"].as_array().unwrap();
    let plus = sets.iter().find(|s| s["eps"] == 1).unwrap();
    assert_eq!(exacts(plus), vec!["1/8", "2"]);
    let doc = json(&["radius", "x - 1", "--space", "euclidean"]);
    let set = &doc["result"]["sets"][0];
    assert_eq!((set["kind"].as_str(), exacts(set).len()), (Some("finite"), 0));
    let doc = json(&["radius", "x", "--space", "euclidean"]);
    assert_eq!(doc["result"]["sets"][0]["kind"], "all_positive");
}

#[test]
fn radius_star_flags() {
    let doc = json(&["radius", TWO_RADII, "--space", "euclidean", "--star"]);
    let entries = doc["result"]["sets"][0]["entries"].as_array().unwrap();
    let flags: Vec<(&str, bool)> =
        entries.iter().map(|e| (e["radius"]["exact"].as_str().unwrap(), e["star"].as_bool().unwrap())).collect();
    assert_eq!(flags, vec![("2", false), ("5", true)]);
    let doc = json(&["radius", TWO_RADII, "--space", "euclidean"]);
    assert!(doc["result"]["sets"][0]["entries"][0]["star"].is_null());
}

#[test]
fn radius_irrational_interval() {
    // Q(0, 1/(2r)) = 1/(4r^2) - 2 vanishes at r = 1/(2 sqrt 2)
    let doc = json(&["radius", "y^2 - 2", "--space", "euclidean"]);
    let r = &doc["result"]["sets"][0]["entries"][0]["radius"];
    assert!(r["exact"].is_null());
    assert_eq!(r["interval"].as_array().unwrap().len(), 2);
    assert!((decimal(&r["approx"]) - 1.0 / (2.0 * 2f64.sqrt())).abs() < 1e-11);
}

#[test]
fn divide_examples() {
    let doc = json(&["divide", QUARTIC, "--r", "2"]);
    assert_eq!(doc["result"]["status"], "divisible");
    assert_eq!(doc["result"]["quotient"], "x^3 + x^2*y + 3*x*y^2 + 2*x^2 + 4*x*y + y^2 + 5*x + 2*y - 24");
    assert_eq!(doc["result"]["substitution"], "0");
    let doc = json(&["divide", QUARTIC, "--r", "1"]);
    assert_eq!(doc["result"]["status"], "not_in_ideal");
    assert!(doc["result"]["quotient"].is_null());
    let doc = json(&["divide", "4*x-4*y+1", "--r", "2"]);
    assert_eq!(doc["result"]["quotient"], "1");
    let doc = json(&["divide", "1/4*x - y - 1", "--r", "1/2", "--eps", "-1"]);
    assert_eq!(doc["result"]["quotient"], "1");
    assert_eq!(doc["result"]["generator"], "1/4*x - y - 1");
}

#[test]
fn verify_examples() {
    let doc = json(&["verify", "4*x-4*y+1", "--tube", "e3-torus:R=10,r=2", "--grid", "64x64"]);
    assert!(decimal(&doc["result"]["max_residual"]) <= 1e-8);
    assert_eq!(doc["result"]["regular_points"], 4096);
    let doc = json(&["verify", "y - 1", "--tube", "e3-torus:R=10,r=2", "--grid", "16x16"]);
    assert!(decimal(&doc["result"]["max_residual"]) > 1e-2);
    for (section, eps) in [("circle", "+ 1"), ("hyperbola", "- 1")] {
        for delta in ["1", "-1"] {
            let tube = format!("l3-spacelike-helix:a=2,b=1,r=1/2,section={section},delta={delta}");
            let doc = json(&["verify", &format!("1/4*x - y {eps}"), "--tube", &tube, "--grid", "32x32"]);
            assert!(decimal(&doc["result"]["max_residual"]) <= 1e-8, "{tube}");
        }
    }
}

#[test]
fn verify_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("samples.csv");
    let p = path.to_str().unwrap();
    json(&["verify", "4*x-4*y+1", "--tube", "e3-torus:R=10,r=2", "--grid", "4x5", "--csv", p]);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "s,t,K,H,K_cf,H_cf,xi,residual");
    assert_eq!(lines.len(), 21);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 8));
}

#[test]
fn linear_and_sff() {
    let doc = json(&["linear", "1", "1", "-1", "--space", "euclidean"]);
    assert_eq!(doc["result"]["verdicts"][0]["case"], "empty");
    // b = c = 0, a != 0
    let doc = json(&["linear", "1", "0", "0", "--space", "euclidean"]);
    assert_eq!(doc["result"]["verdicts"][0]["case"], "cylinders_any_radius");
    // K r^2 - 2 r H + 1 at r = 2 is 4x - 4y + 1, i.e. a = 4, b = -4, c = -1
    let doc = json(&["linear", "4", "-4", "-1", "--space", "euclidean"]);
    let v = &doc["result"]["verdicts"][0];
    assert_eq!(
        (v["case"].as_str(), v["radius"]["exact"].as_str(), v["delta"].as_str()),
        (Some("all_tubes"), Some("2"), Some("0"))
    );
    let doc = json(&["sff", "3", "--space", "euclidean"]);
    assert_eq!(classes(&doc), vec![("1/3".into(), "right_cylinders_only".into(), None)]);
    assert_eq!(doc["result"]["polynomial"], "4*y^2 - 2*x - 9");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| exe(args, None).status.code();
    assert_eq!(code(&["classify", "x"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["classify", "x +"]), Some(1));
    assert_eq!(code(&["classify", "z"]), Some(1));
    assert_eq!(code(&["classify", "x^(1/2)"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["divide", "x", "--r", "0.5"]), Some(1));
    assert_eq!(code(&["verify", "x", "--tube", "e3-torus:R=10"]), Some(1));
    assert_eq!(code(&["verify", "x", "--tube", "e3-torus:R=10,r=1", "--grid", "0x4"]), Some(1));
    assert_eq!(code(&["classify", "0"]), Some(2));
    assert_eq!(code(&["radius", "x - x"]), Some(2));
    assert_eq!(code(&["divide", "x", "--r", "-1"]), Some(2));
    assert_eq!(code(&["linear", "0", "0", "1"]), Some(2));
    assert_eq!(code(&["sff", "0"]), Some(2));
    assert_eq!(code(&["verify", "x", "--tube", "l3-timelike-helix:a=1,b=2,r=1,section=hyperbola"]), Some(2));
    assert_eq!(code(&["verify", "x", "--tube", "e3-torus:R=1,r=1", "--grid", "1x1"]), Some(2));
    assert_eq!(weingarten_cli::CliError::Internal("x".into()).exit_code(), 3);
}

#[test]
fn precision_variable() {
    let args = ["classify", "y - 1", "--space", "hyperbolic"];
    let approx = |p| {
        let out = exe(&args, p);
        assert!(out.status.success());
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        doc["result"]["classes"][0]["radius"]["approx"].as_str().unwrap().to_string()
    };
    assert_eq!(approx(None), format!("{:.11e}", 0.5f64.asinh()));
    assert_eq!(approx(Some("4")), "4.812e-1");
    assert_eq!(exe(&args, Some("0")).status.code(), Some(1));
    assert_eq!(exe(&args, Some("many")).status.code(), Some(1));
}

#[test]
fn reports_match_schema() {
    let schema: Value = serde_json::from_str(include_str!("../../../docs/report-schema.json")).expect("schema is JSON");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let runs: &[&[&str]] = &[
        &["classify", QUARTIC],
        &["classify", "x"],
        &["classify", "k2 - 1/2", "--principal"],
        &["radius", TWO_RADII, "--star"],
        &["radius", "y^2 - 2"],
        &["divide", QUARTIC, "--r", "2"],
        &["divide", QUARTIC, "--r", "1"],
        &["verify", "4*x-4*y+1", "--tube", "e3-torus:R=10,r=2", "--grid", "8x8"],
        &["verify", "x", "--tube", "h3-circle:rho=2,r=1", "--grid", "8x8"],
        &["linear", "1", "2", "3"],
        &["linear", "1", "0", "0"],
        &["sff", "1/2"],
    ];
    for args in runs {
        let doc = json(args);
        let errors: Vec<String> =
            validator.iter_errors(&doc).map(|e| format!("{e} at {}", e.instance_path())).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let mut bad = json(&["linear", "1", "2", "3"]);
    bad["result"]["verdicts"][0]["extra"] = Value::Bool(true);
    assert!(!validator.is_valid(&bad));
}
