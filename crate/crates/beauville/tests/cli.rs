use assert_cmd::Command;

fn bv() -> Command {
    Command::cargo_bin("bv").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bv().args(args).output().unwrap();
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gallery_output_checks_from_stdin() {
    let s = stdout(&["gallery", "sym-thm", "--n", "8"]);
    bv().args(["check-unmixed", "--stdin"]).write_stdin(s).assert().code(0);
}

#[test]
fn repeated_pair_fails_with_witness() {
    let a = bv()
        .args(["check-unmixed", "--group", "ab2:5", "--a1", "(1,0)", "--c1", "(0,1)", "--a2", "(1,0)", "--c2", "(0,1)", "--json"])
        .assert()
        .code(1);
    let v: serde_json::Value = serde_json::from_slice(&a.get_output().stdout).unwrap();
    assert_eq!(v["verdict"], "fail");
    assert!(v["witness"].is_string());
}

#[test]
fn usage_errors_exit_64() {
    bv().arg("no-such-command").assert().code(64);
    bv().args(["check-unmixed", "--group", "ab2:6x"]).assert().code(64);
    bv().args(["gallery", "sym-thm", "--n", "9"]).assert().code(64);
    bv().args(["check-unmixed", "--group", "sym:4", "--a1", "(1,2)", "--c1", "(1,2,3,4)"]).assert().code(64);
}

#[test]
fn undecided_exits_2() {
    // a class cap too small to materialise Σ leaves the intersection undecided
    bv().env("BV_CAPS", "class=10")
        .args(["check-unmixed", "--group", "ab2:5", "--a1", "(1,0)", "--c1", "(0,1)", "--a2", "(1,2)", "--c2", "(3,4)"])
        .assert()
        .code(2);
}

#[test]
fn count_abelian_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["count-abelian", "--n", "5", "--json"])).unwrap();
    assert_eq!(v["count"], 24);
    assert_eq!(v["orbits"], 1);
    assert_eq!(v["b_orbits"], 2);
}

#[test]
fn mixed_structure_round_trip_and_reality() {
    let s = stdout(&["gallery", "mixed-h4-sl2", "--p", "11"]);
    let parsed = beauville::structure::Structure::from_json(&s).unwrap();
    assert_eq!(beauville::structure::Structure::from_json(&parsed.to_json()).unwrap(), parsed);
    bv().args(["check-mixed", "--stdin"]).write_stdin(s.clone()).assert().code(0);
    let a = bv().args(["reality", "--stdin", "--json"]).write_stdin(s).assert().code(0);
    let v: serde_json::Value = serde_json::from_slice(&a.get_output().stdout).unwrap();
    assert_eq!(v["biholo_conjugate"], false);
}

#[test]
fn search_reports_are_reproducible_and_thread_independent() {
    let args = ["search", "--group", "psl2:7", "--up-to-orbit", "--no-timing"];
    let one = stdout(&[&args[..], &["--threads", "1"]].concat());
    let four = stdout(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one, four);
    let v: serde_json::Value = serde_json::from_str(&one).unwrap();
    for key in ["group", "mode", "found", "complete", "seed", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(!v["found"].as_array().unwrap().is_empty());
}

#[test]
fn catalogue_report_carries_disclaimer() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["search", "--catalogue", "24"])).unwrap();
    assert!(v["disclaimer"].as_str().unwrap().contains("partial"));
    assert!(v["found"].as_array().unwrap().is_empty());
}

#[test]
fn wallpaper_scan_and_verify_subset() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["wallpaper-scan", "--d", "3", "--m", "2", "--json"])).unwrap();
    assert!(v["min_intersection"].as_u64().unwrap() >= 3);
    bv().args(["verify-paper", "--only", "8"]).assert().code(0);
    bv().args(["verify-paper", "--only", "1"]).assert().code(1);
}

#[test]
fn pair_reality_prints_case_table() {
    let a = bv()
        .args(["reality", "--group", "sym:8", "--a1", "(5,4,1)(2,6)", "--c1", "(1,2,3)(4,5,6,7,8)", "--json"])
        .assert()
        .code(0);
    let v: serde_json::Value = serde_json::from_slice(&a.get_output().stdout).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 6);
    assert_eq!(v["cases"][0]["solvable"], false);
}
