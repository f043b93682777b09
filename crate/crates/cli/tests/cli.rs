use std::process::{Command, Output};

fn picchi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_picchi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = picchi(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// `n -> χ` rows of the `chi` subcommand.
fn chi_rows(args: &[&str]) -> Vec<(usize, String)> {
    stdout(args)
        .lines()
        .map(|line| {
            let (n, v) = line.split_once('\t').expect("tab-separated row");
            (n.parse().unwrap(), v.to_string())
        })
        .collect()
}

#[test]
fn weight_zero_text() {
    assert_eq!(
        stdout(&["wt0", "--g", "3", "--format", "text"]).trim_end(),
        "1/3 * P1*P3/P6 - 1/3 * P1^4/P2^3"
    );
    assert_eq!(stdout(&["wt0", "--g", "3"]), stdout(&["wt0", "--g", "3", "--format", "text"]));
}

#[test]
fn topological_json_has_eight_terms() {
    let out = stdout(&["top", "--g", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 8);
    assert_eq!(out.trim_end(), include_str!("../../core/golden/top_g2.json").trim_end());
}

#[test]
fn latex_output() {
    let out = stdout(&["wt0", "--g", "3", "--format", "latex"]);
    assert!(out.contains(r"\frac{P_{1} P_{3}}{P_{6}}"), "{out}");
}

#[test]
fn genus_below_two_is_a_usage_error() {
    for cmd in [
        vec!["wt0", "--g", "1"],
        vec!["top", "--g", "0"],
        vec!["chi", "--g", "1", "--kind", "top", "--max-n", "3"],
    ] {
        let out = picchi(&cmd);
        assert_eq!(out.status.code(), Some(2), "{cmd:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains("g >= 2"), "{err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn chi_topological_rows() {
    let rows = chi_rows(&["chi", "--g", "2", "--kind", "top", "--max-n", "8"]);
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0], (0, "2".to_string()));
    assert_eq!(rows[7].1, "0");
    assert_eq!(rows[8].1, "0");
}

#[test]
fn chi_weight_zero_rows() {
    let rows = chi_rows(&["chi", "--g", "2", "--kind", "wt0", "--max-n", "5"]);
    assert_eq!(rows[4].1, "0");
    assert_eq!(rows[5].1, "0");
    assert_eq!(
        chi_rows(&["chi", "--g", "3", "--kind", "wt0", "--max-n", "0"]),
        vec![(0, "0".to_string())]
    );
}

#[test]
fn equivariant_outputs() {
    assert_eq!(stdout(&["equivariant", "--g", "2", "--kind", "wt0", "--n", "0"]).trim_end(), "-1");
    let json = stdout(&["equivariant", "--g", "2", "--kind", "wt0", "--n", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v, serde_json::json!("-1"));
    let deg7 = stdout(&["equivariant", "--g", "2", "--kind", "top", "--n", "7"]);
    assert_ne!(deg7.trim_end(), "0");
    let deg2 = stdout(&["equivariant", "--g", "2", "--kind", "wt0", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&deg2).unwrap();
    assert_eq!(v["degree"], 2);
}

#[test]
fn verify_suites_pass_with_zero_exit() {
    for args in [
        vec!["verify", "tables"],
        vec!["verify", "bounds"],
        vec!["verify", "ncount", "--depth", "14"],
        vec!["verify", "properties", "--seed", "0", "--depth", "6"],
    ] {
        let out = stdout(&args);
        assert!(!out.contains("FAIL"), "{args:?}: {out}");
        assert!(out.trim_end().ends_with("0 failed"), "{out}");
    }
    let tables = stdout(&["verify", "tables"]);
    assert_eq!(tables.lines().filter(|l| l.starts_with("PASS tables/")).count(), 11);
    let props = stdout(&["verify", "properties"]);
    assert!(props.contains("PASS properties/transform-identity"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "properties", "--seed", "3", "--depth", "4"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn unknown_suite_is_rejected() {
    let out = picchi(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}
