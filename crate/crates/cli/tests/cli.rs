use numeric_core::{parse_rational, RingPolynomial};
use serde_json::Value;
use std::process::Command;

fn jtqes(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jtqes")).args(args).output().expect("spawn");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, text) = jtqes(args);
    (code, serde_json::from_str(&text).unwrap_or(Value::Null))
}

fn strip_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn kappa_zero_ladder() {
    let (code, v) = json(&["spectrum", "--j", "0", "--mu", "0", "--kappa", "0", "--window", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1.0");
    let e: Vec<f64> = v["output"]["spectrum"]["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (a, b) in e.iter().zip([1.5, 1.5, 3.5, 3.5]) {
        assert!((a - b).abs() < 1e-10);
    }
}

#[test]
fn juddian_record_round_trips_exact_values() {
    let (code, v) = json(&["juddian", "--k", "1", "--j", "2", "--mu", "1/4"]);
    assert_eq!(code, 0);
    let report = &v["output"]["report"];
    let det: RingPolynomial = serde_json::from_value(report["determinant"].clone()).unwrap();
    let direct = qes_solver::RecurrenceSystem::new(
        &numeric_core::rat(1, 1),
        &numeric_core::rat(2, 1),
        &numeric_core::rat(1, 4),
    )
    .unwrap()
    .determinant();
    assert_eq!(det, direct);
    let points = report["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    for p in points {
        let lo = parse_rational(p["kappa_sq"]["lower"].as_str().unwrap()).unwrap();
        let hi = parse_rational(p["kappa_sq"]["upper"].as_str().unwrap()).unwrap();
        assert!(p["kappa_sq"]["lower"].as_str().unwrap().contains('/'));
        assert!(det.sign_at(&lo) * det.sign_at(&hi) < 0);
        assert_eq!(p["validation"]["exact_eigencheck"], true);
        assert_eq!(p["validation"]["oracle"]["matched"], true);
    }
}

#[test]
fn identical_configs_give_identical_records() {
    let args = ["juddian", "--k", "3/2", "--j", "1", "--mu", "0"];
    let (_, a) = json(&args);
    let (_, b) = json(&args);
    assert_eq!(strip_timing(a), strip_timing(b));
}

#[test]
fn exit_codes() {
    assert_eq!(jtqes(&["juddian", "--k", "1/3", "--j", "0"]).0, 2);
    assert_eq!(jtqes(&["juddian", "--k", "1", "--j", "abc"]).0, 2);
    assert_eq!(jtqes(&["juddian", "--case", "rabi", "--k", "1"]).0, 2);
    assert_eq!(jtqes(&["juddian", "--case", "dimer", "--G", "0", "--k", "1"]).0, 2);
    assert_eq!(jtqes(&["compare-printed", "--k", "3/2"]).0, 2);
    assert_eq!(jtqes(&["spectrum", "--j", "1/2", "--kappa", "1"]).0, 2);
    assert_eq!(jtqes(&["frobnicate"]).0, 2);
    assert_eq!(jtqes(&["juddian", "--k", "1/2", "--j", "-1/2", "--mu", "-1/4"]).0, 3);
    assert_eq!(jtqes(&["spectrum", "--j", "0", "--kappa", "200", "--window", "2", "--tol", "1/100000000000000"]).0, 4);
    assert_eq!(jtqes(&["algebra-check", "--k", "1"]).0, 0);
    assert_eq!(jtqes(&["algebra-check", "--k", "9"]).0, 2);
}

#[test]
fn baseline_condition_for_k_zero() {
    let (code, v) = json(&["juddian", "--k", "0", "--j", "0", "--mu", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["notes"][0], "no kappa roots; baseline condition reported");
    assert_eq!(v["output"]["report"]["baseline_condition"]["determinant"], "-1/2");
}

#[test]
fn dimer_preset_record() {
    let (code, v) = json(&["juddian", "--case", "dimer", "--G", "0.6", "--k", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["preset"]["literature_mu"], "3/10");
    assert_eq!(v["output"]["params"]["mu"], "-3/10");
    assert_eq!(v["output"]["params"]["j"], "-1/1");
}

#[test]
fn compare_printed_reports() {
    let (_, v) = json(&["compare-printed", "--k", "0"]);
    assert_eq!(v["output"]["verdict"], "MATCH");
    assert_eq!(v["output"]["constant"], "1/2");
    let (_, v) = json(&["compare-printed", "--k", "1/2", "--eta", "3", "--rho", "1"]);
    assert_eq!(v["output"]["verdict"], "MATCH");
    // P2 = 8·3·t - 2·(9 - 1)
    assert_eq!(v["output"]["draws"][0]["printed"], serde_json::json!(["-16/1", "24/1"]));
    let (_, v) = json(&["compare-printed", "--k", "1"]);
    assert_eq!(v["output"]["verdict"], "MISMATCH");
    assert!(v["notes"][0].as_str().unwrap().contains("kappa^4"));
}

#[test]
fn csv_has_float_midpoints_only() {
    let (code, text) = jtqes(&["juddian", "--k", "1", "--j", "2", "--mu", "1/4", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(!text.contains('/'));
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert!(fields[5].parse::<f64>().is_ok());
}

#[test]
fn sweeps() {
    let (code, v) = json(&["spectrum", "--j", "1", "--mu", "0.25", "--kappa", "0:2:0.05", "--window", "2"]);
    assert_eq!(code, 0);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 41);
    assert_eq!(cells[40]["at"]["kappa"], "2/1");
    let (_, text) = jtqes(&["juddian", "--k", "1", "--sweep", "j=0:2:1", "--sweep", "mu=0:1/4:1/4", "--format", "csv", "--no-oracle"]);
    assert!(text.starts_with("sweep_j,sweep_mu,k,"));
    let (code, v) = json(&["juddian", "--k", "1/2", "--j", "0", "--sweep", "mu=-1/4:0:1/4", "--no-oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 2);
}

#[test]
fn out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("presets.json");
    let (code, stdout) = jtqes(&["presets", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let names: Vec<&str> = v["output"]["presets"].as_array().unwrap().iter().map(|p| p["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["displaced-oscillator", "linear-ExE", "Gamma8", "dimer", "ExE-external-field"]);
}
