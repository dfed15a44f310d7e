//! Behavioural tests for the binary: exit codes, output determinism, JSON
//! round trips, and CSV batch mode.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitoct"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn splitoct")
}

const J1: &str = r#"{"w":0,"lam":[1,0,0],"x":[0,0,0],"ct":0}"#;
const J2: &str = r#"{"w":0,"lam":[0,1,0],"x":[0,0,0],"ct":0}"#;

#[test]
fn mul_emits_j3() {
    let out = run(&["mul", J1, J2]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["x"][2], 1.0);
    assert_eq!(v["w"], 0.0);
}

#[test]
fn classify_null_octonion() {
    let out = run(&["classify", r#"{"w":1,"lam":[1,0,0],"x":[0,0,0],"ct":0}"#]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["norm"], "zero");
    assert_eq!(v["vector"], "time_like");
}

#[test]
fn parse_error_names_field_and_exits_2() {
    let out = run(&["mul", r#"{"w":0,"lam":[1,0],"x":[0,0,0],"ct":0}"#, J2]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("invalid octonion JSON"), "stderr: {msg}");

    let out = run(&["mul", r#"{"w":0,"lam":[1,0,0],"x":[0,0,0],"ct":0,"zz":1}"#, J2]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("zz"), "stderr should name the offending field: {msg}");
}

#[test]
fn verify_zero_trials_is_usage_error() {
    let out = run(&["verify", "algebra", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_byte_identical() {
    let a = run(&["verify", "algebra", "--seed", "7", "--trials", "50"]);
    let b = run(&["verify", "algebra", "--seed", "7", "--trials", "50"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_zerodiv_all_residuals_zero() {
    let out = run(&["verify", "zerodiv", "--seed", "42", "--trials", "100"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overall"], true);
    let relations = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "zerodiv/relations")
        .unwrap();
    assert_eq!(relations["residual"], 0.0);
}

#[test]
fn seed_env_fallback() {
    let with_flag = run(&["verify", "rotor", "--seed", "99", "--trials", "20"]);
    let with_env = bin()
        .args(["verify", "rotor", "--trials", "20"])
        .env("SPLITOCT_SEED", "99")
        .output()
        .expect("spawn");
    assert_eq!(with_flag.stdout, with_env.stdout);
}

#[test]
fn emitted_octonion_reparses_identically() {
    let out = run(&["rotate", "--axis", "I", "--angle", "0.7234", J1]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: splitoct_core::SplitOctonion = serde_json::from_str(text.trim()).unwrap();
    let again = serde_json::to_string(&parsed).unwrap();
    assert_eq!(text.trim(), again);
}

#[test]
fn decompose_domain_violation_exits_1() {
    let out = run(&[
        "decompose",
        "--axis",
        "I",
        r#"{"w":1,"lam":[0,0,0],"x":[2,2,2],"ct":2}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("w,ct"), "stderr should name the plane: {msg}");
}

#[test]
fn kin_vadd_singular_frame_exits_1() {
    // v1 = 1/tanh(theta) zeroes the denominator
    let out = run(&["kin", "vadd", "--v", "2.163953413738653,0,0", "--theta", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("singular frame"), "stderr: {msg}");
}

#[test]
fn kin_lagrangian_reports_virtual_regime() {
    let out = run(&[
        "kin", "lagrangian", "--m", "1", "--v", "2,0,0", "--p", "1,0,0", "--pdot", "0,0,0",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["virtual"], true);
    assert_eq!(v["radicand"], -3.0);
    assert!(v["lagrangian"].is_null());
}

#[test]
fn kin_aberration_fixed_value() {
    let out = run(&[
        "kin", "aberration", "--plane", "12", "--gamma", "0", "--V", "0.01", "--lamdot", "1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["delta"], -0.01);
}

#[test]
fn batch_vadd_appends_columns() {
    let csv_in = "v1,v2,v3,theta,lamdot2,lamdot3\n1,0,0,0.8,0,0\n0,0.4,0,0.6,0,1.7\n";
    let mut child = bin()
        .args(["kin", "batch", "--op", "vadd", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(csv_in.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "v1,v2,v3,theta,lamdot2,lamdot3,v1p,v2p,v3p");
    // light speed is a fixed point of the first row
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[6], "1");
    // second row matches the single-shot command
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let single = run(&[
        "kin", "vadd", "--v", "0,0.4,0", "--theta", "0.6", "--lamdot3", "1.7",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&single.stdout).unwrap();
    let expect = v["v_prime"][1].as_f64().unwrap();
    assert_eq!(row[7].parse::<f64>().unwrap(), expect);
}

#[test]
fn batch_missing_column_is_usage_error() {
    let mut child = bin()
        .args(["kin", "batch", "--op", "vadd", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"v1,v2,v3\n1,0,0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("theta"), "stderr: {msg}");
}

#[test]
fn autom_applies_to_octonion_and_coordinates() {
    // identity angles leave both targets unchanged
    let out = run(&["autom", "--family", "rot", "--axis", "1", "--angles", "0,0", J1]);
    assert!(out.status.success());
    let v: splitoct_core::SplitOctonion =
        serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.lam[0], 1.0);

    let out = run(&[
        "autom", "--family", "boost", "--axis", "1", "--angles", "0,0",
        "[1,2,3,4,5,6,7]",
    ]);
    assert!(out.status.success());
    let v: Vec<f64> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0]);

    // rot family requires an axis
    let out = run(&["autom", "--family", "rot", "--angles", "0,0", J1]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generators_report_shape() {
    for frame in ["cartan", "diagonal"] {
        let out = run(&["generators", "--frame", frame]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["dimension"], 14);
        assert_eq!(v["closure_ok"], true);
        assert_eq!(v["metric_residuals"].as_array().unwrap().len(), 15);
    }
}
