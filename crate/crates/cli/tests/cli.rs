use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cspkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cspkit")).args(args).env_remove("CSPKIT_THREADS").output().unwrap()
}

fn piped(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cspkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_text_and_json() {
    let o = cspkit(&["poly", "TRI_EAR", "--n", "6", "--k", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + q^2 + 2q^4 + q^5 + q^6 + q^7 + 2q^8 + q^9 + q^10 + q^12");

    let o = cspkit(&["poly", "CAT", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["polynomial"], "1 + q^2 + q^3 + q^4 + q^6");
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 7);
}

#[test]
fn enumerate_streams_one_object_per_line() {
    let o = cspkit(&["enumerate", "NCM", "--n", "3"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert!(v["kind"].is_string());
    }
}

#[test]
fn biject_round_trip() {
    let objects = cspkit(&["enumerate", "NCM", "--n", "4"]).stdout;
    let there = piped(&["biject", "NCM_TO_DYCK"], &objects);
    assert!(there.status.success(), "{}", String::from_utf8_lossy(&there.stderr));
    let back = piped(&["biject", "NCM_TO_DYCK", "--inverse"], &there.stdout);
    assert_eq!(back.stdout, objects);
}

#[test]
fn verify_range_passes() {
    let o = cspkit(&["verify", "T14", "--n-range", "2..8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["instances"], 7);
    assert!(v.get("metadata").is_none());
}

#[test]
fn timings_add_metadata() {
    let o = cspkit(&["verify", "T4", "--n-range", "2..4", "--format", "json", "--timings", "--threads", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["metadata"]["threads"], 2);
    assert_eq!(v["metadata"]["millis"].as_array().unwrap().len(), 3);
}

#[test]
fn negative_control_exit_codes() {
    assert_eq!(cspkit(&["verify", "N2", "--n-range", "2..4"]).status.code(), Some(0));
    assert_eq!(cspkit(&["verify", "N2", "--n-range", "2..4", "--strict"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cspkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cspkit(&["verify", "T99", "--n-range", "2..3"]).status.code(), Some(2));
    assert_eq!(cspkit(&["verify", "T1", "--n-range", "5..2"]).status.code(), Some(2));
    assert_eq!(cspkit(&["enumerate", "NCM", "--n", "-1"]).status.code(), Some(2));
    assert_eq!(piped(&["biject", "NCM_TO_DYCK"], b"{\"kind\":").status.code(), Some(2));
}

#[test]
fn csv_columns() {
    let o = cspkit(&["verify", "T1", "--n-range", "3..4", "--format", "csv"]);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["triple", "params", "kind", "d", "order", "fixed", "eval", "ok", "pass"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|row| &row[0] == "T1" && &row[7] == "true"));

    let o = cspkit(&["stat", "DYCK", "MAJ", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("value,count\n0,1\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify-all", "--max-n", "5", "--format", "json"];
    let a = cspkit(&args);
    let b = cspkit(&["--threads", "1", "verify-all", "--max-n", "5", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("cspkit-cli-test-{}.txt", std::process::id()));
    let o = cspkit(&["list", "families", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.lines().any(|l| l == "NCM"));
}
