//! End-to-end tests of the command-line interface: JSON round-trips,
//! determinism, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

use curvesing::report::MilnorJson;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvesing"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.args(args);
    cmd.output().expect("binary should run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn milnor_json_roundtrip() {
    let out = run(&["milnor", fixture("three_lines.germ").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let parsed: MilnorJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed.m, 3);
    assert_eq!(parsed.e_jac, 6);
    assert_eq!(parsed.i0, 2);
    assert_eq!(parsed.mu, 2);
    assert_eq!(parsed.polar_degree, 4);
    assert!(parsed.agreement);
    assert!(parsed.smoothability_assumed);
    assert_eq!(parsed.trials.len(), 2);
    // re-serializing and re-parsing preserves every field
    let again: MilnorJson =
        serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(parsed, again);
}

#[test]
fn identical_invocations_are_deterministic() {
    let path = fixture("curve_345.germ");
    let a = run(&["milnor", path.to_str().unwrap(), "--json", "--seed", "7"]);
    let b = run(&["milnor", path.to_str().unwrap(), "--json", "--seed", "7"]);
    assert!(a.status.success() && b.status.success());
    // everything except the wall-clock timing must be byte-identical
    let mut ja: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let mut jb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    ja.as_object_mut().unwrap().remove("timings_ms");
    jb.as_object_mut().unwrap().remove("timings_ms");
    assert_eq!(
        serde_json::to_string(&ja).unwrap(),
        serde_json::to_string(&jb).unwrap()
    );
}

#[test]
fn seeds_zero_and_one_agree() {
    for file in ["three_lines.germ", "curve_345.germ", "cusp.germ", "smooth_line.germ"] {
        let path = fixture(file);
        let a = run(&["milnor", path.to_str().unwrap(), "--json", "--seed", "0"]);
        let b = run(&["milnor", path.to_str().unwrap(), "--json", "--seed", "1"]);
        assert!(a.status.success() && b.status.success(), "{file} failed");
        let ja: MilnorJson = serde_json::from_str(&stdout(&a)).unwrap();
        let jb: MilnorJson = serde_json::from_str(&stdout(&b)).unwrap();
        assert_eq!(
            (ja.m, ja.e_jac, ja.i0),
            (jb.m, jb.e_jac, jb.i0),
            "{file}: seeds disagree"
        );
    }
}

#[test]
fn degenerate_matrix_is_exit_code_4() {
    let out = run(&[
        "milnor",
        fixture("three_lines.germ").to_str().unwrap(),
        "--matrix-a",
        "1,1,0;2,2,0",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn parse_error_is_exit_code_2() {
    let out = run(&["milnor", fixture("nonexistent.germ").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // malformed content
    let dir = std::env::temp_dir().join("curvesing-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.germ");
    std::fs::write(&bad, "vars: x, y\nequations:\n  x +* y\nend\n").unwrap();
    let out = run(&["milnor", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_input_is_exit_code_3() {
    let dir = std::env::temp_dir().join("curvesing-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let surface = dir.join("surface.germ");
    std::fs::write(&surface, "vars: x, y, z\nequations:\n  x*y\n  x*y\nend\n").unwrap();
    let out = run(&["milnor", surface.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_exhaustion_is_exit_code_5() {
    let out = run(&[
        "milnor",
        fixture("curve_345.germ").to_str().unwrap(),
        "--step-budget",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn json_errors_carry_the_error_field() {
    let out = run(&[
        "milnor",
        fixture("three_lines.germ").to_str().unwrap(),
        "--json",
        "--matrix-a",
        "1,1,0;2,2,0",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.get("error").is_some());
    // success bodies never contain an error field
    let ok = run(&["milnor", fixture("cusp.germ").to_str().unwrap(), "--json"]);
    assert!(ok.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert!(v.get("error").is_none());
}

#[test]
fn oracle_command() {
    let out = run(&["oracle", fixture("curve_345.germ").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["delta"], 2);
    assert_eq!(v["mu"], 4);
    assert_eq!(v["gaps"], serde_json::json!([1, 2]));
    assert_eq!(v["generators"], serde_json::json!([3, 4, 5]));
}

#[test]
fn colength_command() {
    let out = run(&["colength", fixture("two_points.germ").to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["at_origin"], "0");
    assert_eq!(v["global"], "4");
}

#[test]
fn family_command_profile() {
    let out = run(&[
        "family",
        fixture("three_lines_family.germ").to_str().unwrap(),
        "--json",
        "--matrix-a",
        "1,1,0;1,0,1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for row in rows {
        assert_eq!(row["global_colength"], 2);
        assert_eq!(row["point_count"], 2);
        assert_eq!(row["transversal"], true);
    }
}

#[test]
fn whitney_command_negative_control() {
    let out = run(&[
        "whitney",
        fixture("cusp_to_node.germ").to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "NOT CONSTANT");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["difference"], 3);
    assert_eq!(rows[1]["difference"], 2);
}

#[test]
fn samples_flag_overrides_file() {
    let out = run(&[
        "family",
        fixture("three_lines_family.germ").to_str().unwrap(),
        "--json",
        "--matrix-a",
        "1,1,0;1,0,1",
        "--samples",
        "3",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["t"], "3");
    assert_eq!(rows[0]["global_colength"], 2);
}
