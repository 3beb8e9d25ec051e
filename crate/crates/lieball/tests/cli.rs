//! End-to-end checks of the command-line interface: exit codes, report
//! determinism, and the file-based workflow.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lieball"))
}

#[test]
fn analyze_builtin_succeeds() {
    let out = bin()
        .args(["analyze", "--builtin", "appendix_so12", "--tasks", "IRREDUCIBILITY,TYPE,FORMS"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["exact_arithmetic"], true);
    assert_eq!(report["results"][0]["result"]["verdict"], "IRREDUCIBLE");
    assert_eq!(report["results"][0]["result"]["verified"], true);
    assert_eq!(report["results"][1]["result"]["type"], "REAL");
}

#[test]
fn analyze_file_workflow() {
    let dir = std::env::temp_dir().join(format!("lieball_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("so21.json");
    std::fs::write(
        &path,
        r#"{
            "field": "rat",
            "ambient_dim": 3,
            "signature": [2, 1],
            "generators": [
                [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
                [["0", "0", "1"], ["0", "0", "0"], ["1", "0", "0"]],
                [["0", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
            ]
        }"#,
    )
    .unwrap();
    let out = bin()
        .args(["analyze", "--file"])
        .arg(&path)
        .args(["--tasks", "CLOSURE,IRREDUCIBILITY,TRANSITIVITY"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"][0]["result"]["dimension"], 3);
    assert_eq!(report["results"][1]["result"]["verdict"], "IRREDUCIBLE");
    assert_eq!(report["results"][2]["result"]["locally_transitive"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_file_exits_one() {
    let dir = std::env::temp_dir().join(format!("lieball_cli_bad_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"field": "rat", "ambient_dim": 1, "generators": [[["1/2junk"]]]}"#,
    )
    .unwrap();
    let out = bin().args(["analyze", "--file"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("position"), "diagnostic: {stderr}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn withheld_verdict_exits_two() {
    let dir = std::env::temp_dir().join(format!("lieball_cli_withheld_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rot3.json");
    // Q-irreducible rotation whose splitting field is quadratic: the verdict
    // cannot be certified over Q and is withheld
    std::fs::write(
        &path,
        r#"{
            "field": "rat",
            "ambient_dim": 2,
            "generators": [[["0", "-3"], ["1", "0"]]]
        }"#,
    )
    .unwrap();
    let out = bin()
        .args(["analyze", "--file"])
        .arg(&path)
        .args(["--tasks", "IRREDUCIBILITY", "--budget", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_battery_pass_and_embed() {
    let out = bin().args(["verify", "APPENDIX_A"]).output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], true);

    let out = bin()
        .args(["embed", "--family", "i1", "--k", "1", "--n", "2", "--point", "1,0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["on_quadric"], true);
    assert_eq!(report["in_lieball"], true);

    // out-of-domain point: input error
    let out = bin()
        .args(["embed", "--family", "i1", "--k", "1", "--n", "2", "--point", "1,1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn map_iv_boundary() {
    let out = bin().args(["map-iv", "--z", "1,0"]).output().unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["quadric_residual"], "0");
    assert_eq!(report["in_domain_iv"], false);
    assert_eq!(report["in_lieball"], false);
}

#[test]
fn reports_are_deterministic_across_runs() {
    let run = || {
        bin()
            .args([
                "analyze",
                "--builtin",
                "so(2,3)",
                "--tasks",
                "CLOSURE,COMMUTANT,IRREDUCIBILITY,TYPE,FORMS,CENTER",
                "--seed",
                "3",
            ])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
