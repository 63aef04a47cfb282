use std::process::{Command, Output};

fn planar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sweep_cubic1_exhaustive_both_oracles() {
    let o = planar(&[
        "sweep", "--p", "3", "--m", "1", "--n", "3", "--family", "cubic1", "--mode", "exhaustive", "--oracle", "both",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("family,p,m,n,a,b,criterion,branch,oracle,agree\n"));
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 677);
    assert!(out.contains("\"planar\":13"));
    assert!(out.lines().last().unwrap().starts_with("# fingerprint: p=3 m=1 n=3"));
}

#[test]
fn planarity_of_x_q_plus_1() {
    let o = planar(&["planarity", "--p", "3", "--m", "1", "--n", "3", "--poly", "x^{q+1}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("planar=true"));
    let o = planar(&["planarity", "--p", "3", "--n", "2", "--poly", "x^{q+1}"]);
    assert!(stdout(&o).contains("planar=false"));
}

#[test]
fn usage_errors_exit_1() {
    let o = planar(&["sweep", "--p", "3", "--n", "3", "--family", "sextic"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("sextic") && err.contains("Usage"));

    assert_eq!(planar(&["sweep", "--p", "3", "--n", "4", "--family", "cubic1"]).status.code(), Some(1));
    assert_eq!(planar(&["planarity", "--p", "3", "--n", "3", "--poly", "x^3"]).status.code(), Some(1));
    assert_eq!(planar(&["field-info", "--p", "4", "--n", "3"]).status.code(), Some(1));
    assert_eq!(planar(&[]).status.code(), Some(1));
}

#[test]
fn size_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_planar"))
        .args(["field-info", "--p", "3", "--n", "4"])
        .env("PLANAR_SIZE_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size cap"));
}

#[test]
fn field_info_and_charsum() {
    let o = planar(&["field-info", "--p", "3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order = 27"));

    let o = planar(&["charsum", "--p", "3", "--n", "3", "--poly", "x^2", "--bent"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("|S|^2 = 27"), "{out}");
    assert!(out.contains("bent: true"));
}

#[test]
fn prop_ab_and_custom_sweeps() {
    let o = planar(&["prop-ab", "--p", "3", "--counts-only"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.contains("\"examined\":2028"));

    let o = planar(&[
        "sweep", "--p", "3", "--n", "2", "--family", "custom", "--template", "a x^{q+1} + b x^2", "--oracle", "both",
        "--counts-only",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(planar(&["sweep", "--p", "3", "--n", "2", "--family", "custom"]).status.code(), Some(1));
}

#[test]
fn sample_mode_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = planar(&[
        "sweep", "--p", "5", "--n", "3", "--family", "cubic2", "--mode", "sample", "--count", "300", "--seed", "11",
        "--workers", "3", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["summary"]["examined"], 300);
    assert_eq!(v["summary"]["mismatches"], 0);
}
