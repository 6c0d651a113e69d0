//! End-to-end checks of the command-line surface: canonical round
//! trips, exit-code conventions, and certificate verification.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_gradedk")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gradedk-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn construct_emits_canonical_round_trippable_files() {
    let dir = tempdir("roundtrip");
    let cases: Vec<Vec<&str>> = vec![
        vec!["construct", "quaternion", "--field", "Q", "--a", "-1", "--b", "-1", "-o", "hq.json"],
        vec!["construct", "grade-group-algebra", "--field", "F5", "--torsion", "2", "-o", "f5z2.json"],
        vec!["construct", "group-algebra", "--field", "Q", "--group", "s3", "-o", "qs3.json"],
        vec!["construct", "ground-field", "--field", "Q", "--torsion", "2,2", "-o", "qtriv.json"],
    ];
    for args in cases {
        let out = run_in(&dir, &args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    // matrix shift and tensor on top of the emitted files
    let out = run_in(
        &dir,
        &["construct", "matrix-shift", "f5z2.json", "--shifts", "[[0],[1]]", "-o", "m2.json"],
    );
    assert!(out.status.success());
    let out = run_in(&dir, &["construct", "tensor", "hq.json", "hq.json", "-o", "hh.json"]);
    assert!(out.status.success());
    let out = run_in(&dir, &["construct", "opposite", "hq.json", "-o", "hop.json"]);
    assert!(out.status.success());

    // emit -> parse -> emit is byte-identical: validate then re-emit via
    // a construct that reads and rewrites (validate checks parse; byte
    // identity checked directly here)
    for f in ["hq.json", "f5z2.json", "qs3.json", "qtriv.json", "m2.json", "hh.json", "hop.json"] {
        let text = std::fs::read_to_string(dir.join(f)).unwrap();
        let parsed = gradedk::file::AlgebraFile::parse(&text).unwrap();
        assert_eq!(text, parsed.to_canonical_json(), "{f} round trip");
        let out = run_in(&dir, &["validate", f]);
        assert!(out.status.success(), "{f} validates");
    }
}

#[test]
fn exit_codes_follow_determinacy() {
    let dir = tempdir("exitcodes");
    run_in(&dir, &["construct", "quaternion", "--field", "Q", "--a", "-1", "--b", "-1", "-o", "hq.json"]);
    // determined true and determined false both exit 0
    let out = run_in(&dir, &["check", "hq.json", "--property", "division"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run_in(&dir, &["check", "hq.json", "--property", "field"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("false"));
    // parse errors exit 1
    std::fs::write(dir.join("broken.json"), "{").unwrap();
    let out = run_in(&dir, &["validate", "broken.json"]);
    assert_eq!(out.status.code(), Some(1));
    // a rational quadratic field, trivially graded: the 2-dimensional
    // component passes the deterministic grid without a refutation, so
    // the division verdict stays undetermined, exit 2
    std::fs::write(dir.join("sqrt2.json"), QUADRATIC_FIELD_JSON).unwrap();
    let out = run_in(&dir, &["check", "sqrt2.json", "--property", "division"]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("undetermined"));
}

/// Q[x]/(x^2 - 2), trivially graded.
const QUADRATIC_FIELD_JSON: &str = r#"{
  "field": "Q",
  "grade_group": { "free_rank": 0, "torsion": [] },
  "basis": [ { "name": "1", "degree": [] }, { "name": "s", "degree": [] } ],
  "structure": [ [0,0,0,1,1], [0,1,1,1,1], [1,0,1,1,1], [1,1,0,2,1] ],
  "unit": [ [1,1], [0,1] ]
}"#;

/// Upper-triangular 2x2 over Q, Z-graded with deg E12 = 1.
const UPPER_TRIANGULAR_JSON: &str = r#"{
  "field": "Q",
  "grade_group": { "free_rank": 1, "torsion": [] },
  "basis": [
    { "name": "E11", "degree": [0] },
    { "name": "E12", "degree": [1] },
    { "name": "E22", "degree": [0] }
  ],
  "structure": [ [0,0,0,1,1], [0,1,1,1,1], [1,2,1,1,1], [2,2,2,1,1] ],
  "unit": [ [1,1], [0,1], [1,1] ]
}"#;

#[test]
fn certificates_verify_without_rerunning() {
    let dir = tempdir("certs");
    run_in(&dir, &["construct", "grade-group-algebra", "--field", "Q", "--torsion", "2", "-o", "qz2.json"]);
    // division certificate: inverse pairs
    let out = run_in(&dir, &["check", "qz2.json", "--property", "division", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(dir.join("div.json"), &out.stdout).unwrap();
    let out = run_in(&dir, &["verify-certificate", "div.json", "qz2.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verified"));

    // strong-grading witnesses
    let out = run_in(&dir, &["check", "qz2.json", "--property", "strongly-graded", "--json"]);
    std::fs::write(dir.join("sg.json"), &out.stdout).unwrap();
    let out = run_in(&dir, &["verify-certificate", "sg.json", "qz2.json"]);
    assert_eq!(out.status.code(), Some(0));

    // a proper-ideal certificate from a non-simple algebra
    run_in(&dir, &["construct", "group-algebra", "--field", "Q", "--group", "s3", "-o", "qs3.json"]);
    let out = run_in(&dir, &["check", "qs3.json", "--property", "simple", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(dir.join("simple.json"), &out.stdout).unwrap();
    let out = run_in(&dir, &["verify-certificate", "simple.json", "qs3.json"]);
    assert_eq!(out.status.code(), Some(0));

    // a tampered certificate fails: smuggle the unit into the ideal
    let text = std::fs::read_to_string(dir.join("simple.json")).unwrap();
    let tampered = text.replacen("\"basis\": [", "\"basis\": [[[1,1],[0,1],[0,1],[0,1],[0,1],[0,1]],", 1);
    assert_ne!(text, tampered);
    std::fs::write(dir.join("tampered.json"), tampered).unwrap();
    let out = run_in(&dir, &["verify-certificate", "tampered.json", "qs3.json"]);
    assert_eq!(out.status.code(), Some(1));

    // azumaya determinant certificate
    run_in(&dir, &["construct", "quaternion", "--field", "Q", "--a", "-1", "--b", "-1", "-o", "hq.json"]);
    let out = run_in(&dir, &["check", "hq.json", "--property", "azumaya", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(dir.join("az.json"), &out.stdout).unwrap();
    let out = run_in(&dir, &["verify-certificate", "az.json", "hq.json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn quaternion_k0_flow() {
    let dir = tempdir("k0flow");
    run_in(&dir, &["construct", "quaternion", "--field", "Q", "--a", "-1", "--b", "-1", "-o", "hq.json"]);
    run_in(&dir, &["construct", "ground-field", "--field", "Q", "--torsion", "2,2", "-o", "qtriv.json"]);
    let out = run_in(&dir, &["k0gr", "hq.json", "--route", "division", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["rank"], 1);
    let out = run_in(&dir, &["k0gr", "hq.json", "--route", "dade", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["rank"], 1);
    let out = run_in(&dir, &["k0gr", "qtriv.json", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["rank"], 4);
    let out = run_in(&dir, &["torsion-report", "hq.json", "qtriv.json", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["map_matrix"], serde_json::json!([["1", "1", "1", "1"]]));
    assert_eq!(v["detail"]["kernel"]["free_rank"], 3);
    assert_eq!(v["detail"]["hypothesis_basis_degrees_invertible"]["status"], "false");
    assert!(v["detail"]["hypothesis_notice"].is_string());
    // an unsupported shape must fail with a clear refusal: the upper
    // triangular algebra is neither division, nor transported, nor
    // strongly graded
    std::fs::write(dir.join("ut.json"), UPPER_TRIANGULAR_JSON).unwrap();
    let out = run_in(&dir, &["k0gr", "ut.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported"));
    // trivially graded group algebras go through the degree-zero route
    run_in(&dir, &["construct", "group-algebra", "--field", "Q", "--group", "s3", "-o", "qs3.json"]);
    let out = run_in(&dir, &["k0gr", "qs3.json", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["rank"], 3);
    assert_eq!(v["detail"]["route"], "degree-zero");
}

#[test]
fn ungraded_k0_block_counts() {
    let dir = tempdir("k0blocks");
    run_in(&dir, &["construct", "group-algebra", "--field", "Q", "--group", "s3", "-o", "qs3.json"]);
    let out = run_in(&dir, &["k0", "qs3.json", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["detail"]["rank"], 3);
}

#[test]
fn corpus_run_succeeds() {
    let dir = tempdir("corpus");
    let out = run_in(&dir, &["corpus-run", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("quaternions-q"));
    assert!(text.contains("matrix-q-z2-01"));
}
