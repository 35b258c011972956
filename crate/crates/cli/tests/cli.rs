use std::path::Path;
use std::process::{Command, Output};

fn modq(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modq"))
        .args(args)
        .env("MODQ_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn expand_examples() {
    let d = tempfile::tempdir().unwrap();
    let eta = modq(d.path(), &["expand", "eta", "--order", "5"]);
    assert!(eta.status.success());
    let v = json(&eta);
    assert_eq!(v["unit"], 24);
    assert_eq!(v["terms"], serde_json::json!([[1, "1"], [25, "-1"], [49, "-1"]]));

    let e4 = json(&modq(d.path(), &["expand", "E4", "--order", "3"]));
    assert_eq!(e4["terms"], serde_json::json!([[0, "1"], [1, "240"], [2, "2160"], [3, "6720"]]));

    let phi = json(&modq(d.path(), &["expand", "phi@333", "--var", "qd", "--order", "100"]));
    assert_eq!(phi["terms"], serde_json::json!([[9, "-1"], [81, "3"]]));

    let phi_q = json(&modq(d.path(), &["expand", "phi@333", "--order", "4"]));
    assert_eq!(phi_q["unit"], 24);
    assert_eq!(phi_q["terms"][0], serde_json::json!([9, "-1"]));
}

#[test]
fn expand_errors_have_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(modq(d.path(), &["expand", "nope"]).status.code(), Some(2));
    assert_eq!(modq(d.path(), &["expand", "E4", "--var", "qd"]).status.code(), Some(2));
    assert_eq!(modq(d.path(), &["expand", "E4", "--order", "0"]).status.code(), Some(2));
    assert_eq!(modq(d.path(), &["expand", "E4", "--order", "100000"]).status.code(), Some(3));
}

#[test]
fn cache_hit_is_byte_identical() {
    let d = tempfile::tempdir().unwrap();
    let args = ["expand", "C2@N2", "--order", "20", "--format", "table"];
    let cold = modq(d.path(), &args);
    let warm = modq(d.path(), &args);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(!String::from_utf8_lossy(&cold.stderr).contains("cache hit"));
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache hit"));
    let listed = stdout(&modq(d.path(), &["cache", "list"]));
    assert!(listed.starts_with("C2@N2\tq\t20\ttable"), "{listed}");
    assert_eq!(stdout(&modq(d.path(), &["cache", "path"])).trim(), d.path().to_str().unwrap());
    assert!(modq(d.path(), &["cache", "clear"]).status.success());
    assert_eq!(stdout(&modq(d.path(), &["cache", "list"])), "");
}

#[test]
fn verify_exit_codes_and_stream() {
    let d = tempfile::tempdir().unwrap();
    let ok = modq(d.path(), &["verify", "syz@244", "--order", "30"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["status"], "ok");
    assert_eq!(modq(d.path(), &["verify", "nosuchcheck"]).status.code(), Some(2));
    let all = modq(d.path(), &["verify", "syz@*"]);
    assert_eq!(all.status.code(), Some(1));
    let names: Vec<String> = stdout(&all)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(names, ["syz@2222", "syz@236", "syz@244", "syz@333"]);
}

#[test]
fn verify_output_independent_of_jobs() {
    let d = tempfile::tempdir().unwrap();
    let one = modq(d.path(), &["verify", "*", "--jobs", "1"]);
    let eight = modq(d.path(), &["verify", "*", "--jobs", "8"]);
    assert_eq!(one.stdout, eight.stdout);
    assert!(stdout(&one).lines().count() >= 25);
    assert!(!stdout(&one).contains("runtime_ms"));
}

#[test]
fn lists_name_known_objects() {
    let d = tempfile::tempdir().unwrap();
    let s = stdout(&modq(d.path(), &["expand", "--list"]));
    for n in ["eta\t", "E4\t", "A@N3\t", "alpha@N4\t", "C6@N1star\t", "W@236\t"] {
        assert!(s.contains(n), "{n}");
    }
    let c = stdout(&modq(d.path(), &["verify", "--list"]));
    assert!(c.contains("clifford@333\t120 in qd"));
}
