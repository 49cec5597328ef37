use std::process::Command;

use sharpmean_cli::{emit_curve, run, Failure, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sharpmean").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value(out: &str, key: &str) -> f64 {
    let prefix = format!("{key}=");
    out.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .and_then(|v| v.split_whitespace().next())
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .parse()
        .unwrap()
}

#[test]
fn means_prints_all_four() {
    let (code, out, _) = call(&["means", "--a", "2", "--b", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(value(&out, "A"), 1.5);
    // 1/(2 asinh(1/3)), 1/(2 atan(1/3)), sqrt(5/2)
    assert!((value(&out, "M") - 1.526_949_978_913_487_2).abs() < 4e-16);
    assert!((value(&out, "T") - 1.553_998_876_358_169_3).abs() < 4e-16);
    assert!((value(&out, "S") - 1.581_138_830_084_189_7).abs() < 4e-16);
}

#[test]
fn means_with_precision_prints_enclosures() {
    let (code, out, _) = call(&["means", "--a", "2", "--b", "1", "--precision", "200"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M in [1.52694997891348721315781343715323"));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(call(&["means", "--a", "-1", "--b", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["means", "--a", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["means", "--a", "2", "--b", "1", "--precision", "8"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["witness", "--p", "0.78", "--side", "sideways"]).0, EXIT_USAGE);
    assert_eq!(call(&["constants", "--digits", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn constants_to_fifteen_digits() {
    let (code, out, _) = call(&["constants", "--digits", "15"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda=0.768002097734333"));
    assert!(out.contains("mu=0.788675134594813"));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn curve_single_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let p = path.to_str().unwrap();
    let (code, _, _) = call(&["curve", "--t-min", "2", "--t-max", "2", "--samples", "1", "--out", p]);
    assert_eq!(code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.split_terminator('\n').collect();
    assert_eq!(lines[0], "t,p_eq,M,S_lambda,S_mu,residual");
    assert_eq!(lines.len(), 2);
    let p_eq: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((p_eq - 0.785_621).abs() < 1e-5);
    assert!(!text.contains('\r'));
}

#[test]
fn curve_rejects_zero_samples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    let p = path.to_str().unwrap();
    assert_eq!(call(&["curve", "--t-min", "2", "--t-max", "3", "--samples", "0", "--out", p]).0, EXIT_USAGE);
    assert!(matches!(emit_curve(2.0, 3.0, 0, false, &path), Err(Failure::Usage(_))));
    let missing = dir.path().join("no/such/dir/c.csv");
    assert!(matches!(emit_curve(2.0, 3.0, 2, false, &missing), Err(Failure::Failed(_))));
}

#[test]
fn curve_rows_lie_between_the_constants_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert_eq!(emit_curve(1.0001, 1e6, 100, true, &a).unwrap(), 100);
    assert_eq!(emit_curve(1.0001, 1e6, 100, true, &b).unwrap(), 100);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    // 0.76800209773433342, 0.78867513459481288
    let (lam, mu) = (0.768_002_097_734_333_4, 0.788_675_134_594_812_9);
    for line in text.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f.len(), 6);
        assert!(lam < f[1] && f[1] < mu, "{line}");
        assert!(f[3] < f[2] && f[2] < f[4], "{line}");
    }
}

#[test]
fn certify_writes_a_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let (code, out, _) = call(&["certify", "--precision", "256", "--report", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let records = v["records"].as_array().unwrap();
    let definite = records.iter().filter(|r| r["status"] == "certified").count();
    assert_eq!(definite, records.len());
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(!out.contains("FAILED"));
}

#[test]
fn witnesses_on_both_sides() {
    let (code, out, _) = call(&["witness", "--p", "0.78", "--side", "infinity"]);
    assert_eq!(code, EXIT_OK);
    assert!(value(&out, "T0") > 1.0);
    let (code, out, _) = call(&["witness", "--p", "0.78", "--side", "near-one"]);
    assert_eq!(code, EXIT_OK);
    assert!(value(&out, "delta") > 0.0);
    let (code, _, err) = call(&["witness", "--p", "0.76", "--side", "infinity"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("0.76"));
    assert_eq!(call(&["witness", "--p", "0.79", "--side", "near-one"]).0, EXIT_FAILURE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sharpmean");
    let ok = Command::new(bin).args(["means", "--a", "1", "--b", "7"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("S=5.0"));
    let bad = Command::new(bin).args(["means", "--a", "x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
