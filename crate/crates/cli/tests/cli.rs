use std::process::{Command, Output};

use poincare_core::multiplier::{verify_farkas, verify_multiplier};
use poincare_core::{rational, Polynomial};
use serde_json::Value;

fn poincare(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poincare")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_paper_table_passes() {
    let out = poincare(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let rows = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert!(rows >= 9);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("not positive"));
    assert!(text.contains("2,1,1,0; b = 4"));
}

#[test]
fn check_reports_isolating_interval() {
    let out = poincare(&["check", "--coeffs", "10,-2,-10,-1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["positive"], false);
    assert_eq!(v["witness_root_interval"].as_array().unwrap().len(), 2);

    let out = poincare(&["check", "--angles", "1/3", "--radii", "2"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["positive"], true);
}

#[test]
fn bound_lists_terms_and_rejects_raw_input() {
    let out = poincare(&["bound", "--angles", "7/24,10/24,11/24,14/24"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let contributions: Vec<&str> =
        text.lines().filter_map(|l| l.split("contribution ").nth(1)).collect();
    assert_eq!(contributions, ["2", "1", "1", "0"]);
    assert!(text.contains("bound 4"));

    let out = poincare(&["bound", "--coeffs", "10,-2,10,-1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn opt_on_raw_coefficients_needs_a_cap() {
    let out = poincare(&["opt", "--coeffs", "10,-2,10,-1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = poincare(&["opt", "--coeffs", "10,-2,-10,-1,1", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(2), "not positive is invalid input");
    let out = poincare(&["opt", "--coeffs", "1,-2,1,0,0", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certificates_verify_independently() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let report = dir.path().join("opt.json");
    let out = poincare(&[
        "opt",
        "--coeffs",
        "10,-2,10,-1,1",
        "--max-degree",
        "3",
        "--hull-check",
        "--emit-certificate",
        cert.to_str().unwrap(),
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("opt 1"));

    let f = Polynomial::from_ints(&[10, -2, 10, -1, 1]);
    let certs: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(certs.len(), 2);
    for c in &certs {
        let s = c["s"].as_u64().unwrap() as usize;
        if c["feasible"].as_bool().unwrap() {
            let g: Polynomial = serde_json::from_value(c["g"].clone()).unwrap();
            assert!(verify_multiplier(&f, &g, s));
            assert!(c["farkas"].is_null());
        } else {
            let y: Vec<_> = c["farkas"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| rational::parse(v.as_str().unwrap()).unwrap())
                .collect();
            assert!(verify_farkas(&f, s, &y));
        }
    }
    let summary: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(summary["opt"], 1);
}

#[test]
fn opt_from_inline_spec_uses_the_bound_as_cap() {
    let spec = r#"{"angles": [{"num": 7, "den": 24, "r": 1}, {"num": 10, "den": 24, "r": 10}], "linear": [{"p": "1/2"}]}"#;
    let out = poincare(&["opt", "--input", spec, "--hull-check"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["bound"], 3);
    assert!(v["opt"].as_u64().unwrap() <= 3);
    assert_eq!(v["precision_digits"], 50);
    assert!(String::from_utf8_lossy(&out.stderr).contains("rounded to 50 digits"));

    let out = poincare(&["opt", "--input", spec, "--exact"]);
    assert_eq!(out.status.code(), Some(2), "7π/24 has no rational cosine");
}

#[test]
fn spec_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    std::fs::write(&path, r#"{"quad": [{"t": "1/2", "r": 1}]}"#).unwrap();
    let out = poincare(&["opt", "--input", path.to_str().unwrap(), "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["opt"], 1);
    assert_eq!(v["bound"], 1);

    let out = poincare(&["opt", "--input", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extremal_attains_the_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("extremal.json");
    let out = poincare(&["extremal", "--angles", "9/24,10/24,11/24", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["opt"], v["bound"]);
    assert_eq!(v["bound"], 3);
    assert_eq!(v["spec"]["angles"].as_array().unwrap().len(), 3);
    assert_eq!(v["certificate"]["feasible"], true);
}

#[test]
fn extend_keeps_opt() {
    let out = poincare(&["extend", "--angles", "7/24,10/24", "--radii", "1,10", "--phi", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["opt"], 3);
    assert_eq!(v["extension"]["phi"], "1/1");

    let out = poincare(&["extend", "--angles", "7/24,10/24", "--phi", "1/3"]);
    assert_eq!(out.status.code(), Some(2), "φ below π/2 is rejected");
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["bound", "--angles", "7/0"][..],
        &["bound", "--angles", "3/2"],
        &["check", "--coeffs", "1,x"],
        &["check", "--input", "{not json"],
        &["check"],
        &["opt", "--angles", "1/3", "--coeffs", "1,1"],
        &["no-such-command"],
    ] {
        assert_eq!(poincare(args).status.code(), Some(2), "{args:?}");
    }
}

fn without_timing(csv: &str) -> Vec<String> {
    csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect()
}

#[test]
fn explore_is_deterministic_and_gap_free_at_extremal_radii() {
    let args = ["explore", "--samples", "4", "--seed", "11", "--max-ell", "2"];
    let a = stdout(&poincare(&args));
    let b = stdout(&poincare(&args));
    assert_eq!(without_timing(&a), without_timing(&b));

    let mut reader = csv::Reader::from_reader(a.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        ["angles", "radii", "bound", "opt", "gap", "precision", "wall_time_ms"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 8);
    for pair in rows.chunks(2) {
        let (unit, extremal) = (&pair[0], &pair[1]);
        assert!(unit[1].split(';').all(|r| r == "1"));
        let bound: u64 = unit[2].parse().unwrap();
        let opt: u64 = unit[3].parse().unwrap();
        assert_eq!(unit[4].parse::<u64>().unwrap(), bound - opt);
        assert_eq!(&extremal[4], "0");
        assert_eq!(extremal[2].parse::<u64>().unwrap(), bound);
    }

    let other = stdout(&poincare(&["explore", "--samples", "4", "--seed", "12", "--max-ell", "2"]));
    assert_ne!(without_timing(&a), without_timing(&other));
}

#[test]
fn explore_with_no_samples_writes_only_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = poincare(&["explore", "--samples", "0", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "angles,radii,bound,opt,gap,precision,wall_time_ms\n");
}
