//! End-to-end tests of the installed binary: flag handling, output bytes,
//! and exit codes.

use std::process::{Command, Output};

fn sl2char(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2char"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_seven_json_headline() {
    let out = sl2char(&["verify", "--p", "7", "--r", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["schema_version"], "1");
    let entry = &doc["entries"][0];
    assert_eq!(entry["p"], "7");
    assert_eq!(entry["h"], "1");
    assert_eq!(entry["n_diff"], "7");
    assert_eq!(entry["n_sum"], "25");
    assert_eq!(entry["n_plus"], "16");
    assert_eq!(entry["n_minus"], "9");
    assert_eq!(doc["summary"]["failed"], "0");
    assert!(doc.get("generated_at").is_none());
}

#[test]
fn verify_json_round_trips_byte_identically() {
    let out = sl2char(&["verify", "--p", "5", "--r", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let emitted = stdout_of(&out);
    let parsed: sl2char::report::ReportDocument = serde_json::from_str(&emitted).unwrap();
    assert_eq!(parsed.to_json(), emitted);
}

#[test]
fn verify_is_deterministic_across_runs() {
    let first = sl2char(&["verify", "--p", "3", "--r", "2", "--format", "json"]);
    let second = sl2char(&["verify", "--p", "3", "--r", "2", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_batch_lists_every_prime() {
    let out = sl2char(&[
        "verify", "--p", "3", "--p", "5", "--r", "2", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["generated_for"].as_array().unwrap().len(), 2);
    assert_eq!(doc["entries"][0]["p"], "3");
    assert_eq!(doc["entries"][1]["p"], "5");
    assert_eq!(doc["entries"][1]["h"], "-");
    assert_eq!(doc["entries"][1]["n_diff"], "0");
}

#[test]
fn verify_rejects_invalid_input_with_exit_2() {
    let out = sl2char(&["verify", "--p", "9", "--r", "2"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("9 is not an odd prime"), "stderr: {stderr}");

    let out = sl2char(&["verify", "--p", "7", "--r", "1"]);
    assert_eq!(exit_code(&out), 2);

    let out = sl2char(&["verify", "--p", "7", "--r", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 2);

    // Missing required flag: the argument parser itself exits 2.
    let out = sl2char(&["verify", "--p", "7"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_timestamp_only_on_request() {
    let out = sl2char(&[
        "verify", "--p", "3", "--r", "2", "--format", "json", "--timestamp",
    ]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let stamp = doc["generated_at"].as_str().unwrap();
    assert!(stamp.ends_with('Z') && stamp.contains('T'), "stamp: {stamp}");
}

#[test]
fn verify_nonresidue_override_changes_nothing() {
    // The smallest nonresidue mod 7 is 3; 5 is another one. Identical
    // reports either way, byte for byte.
    let default = sl2char(&["verify", "--p", "7", "--r", "2", "--format", "json"]);
    let with_five = sl2char(&[
        "verify",
        "--p",
        "7",
        "--r",
        "2",
        "--format",
        "json",
        "--nonresidue",
        "5",
    ]);
    assert_eq!(exit_code(&with_five), 0);
    assert_eq!(default.stdout, with_five.stdout);

    // A quadratic residue is rejected as invalid input.
    let residue = sl2char(&[
        "verify",
        "--p",
        "7",
        "--r",
        "2",
        "--nonresidue",
        "2",
    ]);
    assert_eq!(exit_code(&residue), 2);
}

#[test]
fn verify_writes_report_to_file() {
    let path = std::env::temp_dir().join("sl2char_cli_test_report.json");
    let _ = std::fs::remove_file(&path);
    let out = sl2char(&[
        "verify",
        "--p",
        "3",
        "--r",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(doc["entries"][0]["n_diff"], "1");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn table_csv_has_pinned_rows() {
    let out = sl2char(&["table", "--pmax", "11", "--r", "2"]);
    assert_eq!(exit_code(&out), 0);
    let csv = stdout_of(&out);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok"
    );
    assert!(csv.contains("3,2,1,1,1,1,0,true"));
    assert!(csv.contains("7,2,1,7,25,16,9,true"));
    assert!(csv.contains("11,2,1,11,105,58,47,true"));
}

#[test]
fn table_single_row_at_pmax_3() {
    let out = sl2char(&["table", "--pmax", "3", "--r", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "p,r,h,n_diff,n_sum,n_plus,n_minus,parity_ok\n3,2,1,1,1,1,0,true\n"
    );
}

#[test]
fn table_other_formats_and_errors() {
    let out = sl2char(&["table", "--pmax", "7", "--r", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[2]["n_plus"], "16");

    let out = sl2char(&["table", "--pmax", "7", "--r", "2", "--format", "text"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).starts_with("p"));

    let out = sl2char(&["table", "--pmax", "2", "--r", "2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn classnum_pinned_and_rejected() {
    let out = sl2char(&["classnum", "--p", "23"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("h = 3"));
    assert!(text.contains("dirichlet: agree"));
    assert!(text.contains("gross: agree"));

    let out = sl2char(&["classnum", "--p", "7", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["h"], "1");
    assert_eq!(doc["dirichlet_agrees"], "true");
    assert_eq!(doc["gross_agrees"], "true");

    let out = sl2char(&["classnum", "--p", "13"]);
    assert_eq!(exit_code(&out), 2);
}
