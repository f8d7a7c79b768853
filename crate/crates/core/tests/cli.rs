use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("workspaces").join(name)
}

fn dualcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcheck")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dualcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn run_exit_codes_follow_verdicts() {
    for (file, expected) in [
        ("regular.json", 0),
        ("base_change.json", 0),
        ("classes.json", 0),
        ("dual_numbers.json", 1),
        ("tilting.json", 1),
    ] {
        let o = dualcheck(&["run", workspace(file).to_str().unwrap()]);
        assert_eq!(code(&o), expected, "{file}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn subcommands_filter_tasks() {
    let o = dualcheck(&["check-dualizing", workspace("dual_numbers.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8_lossy(&o.stdout);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("check-dualizing") && out.contains("pass (exact)"), "{out}");

    let o = dualcheck(&["roundtrip", "--label", "expected-failure", workspace("dual_numbers.json").to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));

    let o = dualcheck(&["relative-iv", workspace("regular.json").to_str().unwrap()]);
    assert_eq!(code(&o), 3, "no such task");
}

#[test]
fn candidate_flag_synthesizes_a_check() {
    let ws = workspace("dual_numbers.json");
    let o = dualcheck(&["check-dedualizing", "--candidate", "residue", ws.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let o = dualcheck(&["check-dedualizing", "--candidate", "nonexistent", ws.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonexistent"));
}

#[test]
fn report_is_deterministic_json() {
    let ws = workspace("regular.json");
    let runs: Vec<String> = (0..2)
        .map(|_| {
            let o = dualcheck(&["run", "--report", "-", "--seed", "9", ws.to_str().unwrap()]);
            assert_eq!(code(&o), 0);
            String::from_utf8(o.stdout).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let v: serde_json::Value = serde_json::from_str(&runs[0]).unwrap();
    assert_eq!(v["exit_code"], 0);
    assert_eq!(v["seed"], 9);
    assert!(v["tasks"].as_array().unwrap().iter().all(|t| t["verdict"]["status"] == "pass-exact"));
}

#[test]
fn validate_writes_a_stable_canonical_form() {
    for file in ["regular.json", "tilting.json", "base_change.json"] {
        let first = scratch(&format!("first-{file}"));
        let second = scratch(&format!("second-{file}"));
        let o = dualcheck(&["validate", workspace(file).to_str().unwrap(), "--canonical", first.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let o = dualcheck(&["validate", first.to_str().unwrap(), "--canonical", second.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        assert_eq!(std::fs::read_to_string(&first).unwrap(), std::fs::read_to_string(&second).unwrap());
    }
}

#[test]
fn field_override_reinterprets_the_workspace() {
    let o = dualcheck(&["--field", "F5", "run", workspace("regular.json").to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let o = dualcheck(&["--field", "6", "run", workspace("regular.json").to_str().unwrap()]);
    assert_eq!(code(&o), 3);
}

#[test]
fn invalid_input_exits_3() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"field\": \"rationals\", \"algebras\": {\"A\": {\"sample\": \"kA3\"}}}").unwrap();
    let o = dualcheck(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("kA3"));

    let o = dualcheck(&["run", "/nonexistent/ws.json"]);
    assert_eq!(code(&o), 3);
    let o = dualcheck(&["frobnicate"]);
    assert_eq!(code(&o), 3);
    let o = dualcheck(&["--window", "0", "run", workspace("regular.json").to_str().unwrap()]);
    assert_eq!(code(&o), 3);
}
