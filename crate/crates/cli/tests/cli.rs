use std::process::Command;

use lieho_cli::{ReportDocument, Results, Status};
use serde_json::Value;

fn lieho(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lieho")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../schemas/report.v1.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

/// Runs a JSON command, validates it against the schema and checks the
/// serde round trip.
fn json_report(args: &[&str]) -> ReportDocument {
    let (code, stdout, stderr) = lieho(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    let value: Value = serde_json::from_str(&stdout).unwrap();
    if let Err(errors) = schema().validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:?}");
    }
    let doc = ReportDocument::from_json(&stdout).unwrap();
    assert_eq!(serde_json::to_value(&doc).unwrap(), value);
    doc
}

#[test]
fn weight_three_with_two_tensor_factors() {
    let doc = json_report(&["homology", "--r", "2", "--n", "3"]);
    let Results::Homology { report } = doc.results else { panic!("wrong kind") };
    let h1 = report.h1.unwrap();
    assert_eq!(h1.len(), 1);
    assert_eq!((h1[0].lambda.parts(), h1[0].mu.parts(), h1[0].mult), (&[3][..], &[2][..], 1));
    assert_eq!(doc.status, Status::Pass);
}

#[test]
fn one_factor_is_the_sign_twisted_exterior_cube() {
    let (code, csv, _) = lieho(&["homology", "--r", "1", "--n", "3", "--which", "h1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv, "lambda,mu,mult\n1.1.1,1,1\n");
}

#[test]
fn weight_zero_has_one_dimensional_h0() {
    let doc = json_report(&["homology", "--r", "0", "--n", "0"]);
    let Results::Homology { report } = doc.results else { panic!("wrong kind") };
    assert_eq!(report.h0_dim, Some(1));
    assert_eq!(report.h1_dim, Some(0));
}

#[test]
fn csv_with_both_groups_has_a_group_column() {
    let (code, csv, _) = lieho(&["homology", "--r", "2", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("group,lambda,mu,mult"));
    assert!(lines.clone().any(|l| l == "h1,3,2,1"));
    assert!(lines.all(|l| l.starts_with("h0,") || l.starts_with("h1,")));
}

#[test]
fn which_h0_omits_h1() {
    let doc = json_report(&["homology", "--r", "2", "--n", "3", "--which", "h0"]);
    let Results::Homology { report } = doc.results else { panic!("wrong kind") };
    assert!(report.h1.is_none() && report.h0.is_some());
}

fn character_rows(shape: &str) -> Vec<String> {
    let (code, csv, stderr) = lieho(&["character", "--shape", shape, "--format", "csv"]);
    assert_eq!(code, 0, "{stderr}");
    csv.lines().skip(1).map(|l| l.rsplit_once(',').map(|(a, m)| format!("{}:{m}", a.split(',').next().unwrap())).unwrap()).collect()
}

#[test]
fn characters_of_small_shapes() {
    assert_eq!(character_rows("L3*T1*T1"), ["3.1.1:1", "2.2.1:1", "2.1.1.1:2", "1.1.1.1.1:1"]);
    assert_eq!(character_rows("L2*L2"), ["2.2:1", "2.1.1:1", "1.1.1.1:1"]);
    assert_eq!(character_rows("G3"), ["3:1"]);
    let doc = json_report(&["character", "--shape", "L2*L2"]);
    assert!(matches!(doc.results, Results::Character { n: 4, .. }));
}

#[test]
fn r3_constants() {
    let doc = json_report(&["verify", "--scope", "r3"]);
    let Results::Verify { suites } = doc.results else { panic!("wrong kind") };
    let c = &suites[0].constants;
    assert_eq!(c["trace20"], "0");
    assert_eq!(c["isotypicTrace"], "-2");
    assert_eq!(c["blockTrace"], "-1/2");
    assert_eq!(c["blockDet"], "1");
    assert_eq!(c["blockCharPoly"], "1,1/2,1");
    assert_eq!(doc.status, Status::Pass);
}

#[test]
fn theorem_at_r_zero() {
    let doc = json_report(&["verify", "--scope", "theorem", "--r", "0"]);
    assert_eq!(doc.status, Status::Pass);
    assert_eq!(doc.inputs["scope"], "theorem");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "--scope", "theorem", "--r", "5"][..],
        &["verify", "--scope", "inductive", "--r", "2..3"],
        &["verify", "--seed-order", "--scope", "r3"],
        &["verify", "--scope", "nonsense"],
        &["verify", "--r", "3..1"],
        &["character", "--shape", "L3*X1"],
        &["character", "--shape", "L3", "--n", "4"],
        &["homology", "--r", "2"],
    ] {
        let (code, _, stderr) = lieho(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("lieho-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, stdout, _) = lieho(&["homology", "--r", "1", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let doc = ReportDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.status, Status::Pass);
    assert!(!path.with_extension("tmp").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn range_parsing() {
    use lieho_cli::RRange;
    assert_eq!("2..4".parse::<RRange>().unwrap(), RRange(2..=4));
    assert_eq!("3".parse::<RRange>().unwrap(), RRange(3..=3));
    assert!("4..2".parse::<RRange>().is_err());
    assert!("a..2".parse::<RRange>().is_err());
}
