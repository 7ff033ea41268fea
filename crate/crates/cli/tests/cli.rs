use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degexclude"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_graphical() {
    let o = run(&["check", "2,2,2,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "graphical\n");
    let o = run(&["check", "3,3,1"]);
    assert_eq!(stdout(&o), "not graphical\n");
}

#[test]
fn sequence_arguments() {
    let o = run(&["--json", "check", "1,2,2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sequence"], "2,2,1");
    for bad in ["2,-1", "2,x", "2,,2"] {
        assert_eq!(code(&run(&["check", bad])), 2, "{bad}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["--bogus"])), 2);
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["classify", "--exclude", "C3", "2,2,2"])), 2);
    assert_eq!(code(&run(&["realize", "3,3"])), 2);
    assert_eq!(code(&run(&["verify", "--claim", "nope"])), 2);
    assert_eq!(
        code(&run(&["verify", "--claim", "prop1", "--max-vertices", "9"])),
        2
    );
    assert_eq!(code(&run(&["degrees", "not graph6!"])), 2);
}

#[test]
fn help_for_every_subcommand() {
    for sub in [
        "check",
        "realize",
        "realizations",
        "precedes",
        "classify",
        "compose",
        "degrees",
        "verify",
        "poset",
        "universe",
    ] {
        let o = run(&[sub, "--help"]);
        assert_eq!(code(&o), 0, "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
}

#[test]
fn realize_round_trips_through_degrees() {
    for seq in ["3,3,2,2,2", "4,4,3,3,2,2", "0", "1,1", "5,5,5,5,5,5"] {
        let o = run(&["realize", seq]);
        assert_eq!(code(&o), 0);
        let g6 = stdout(&o);
        let o = run(&["degrees", g6.trim()]);
        assert_eq!(stdout(&o).trim(), seq);
    }
}

#[test]
fn realizations_listed() {
    let o = run(&["realizations", "2,2,2,2,2,2"]);
    let text = stdout(&o);
    assert!(text.ends_with("# 2 realization(s)\n"));
    let o = run(&["--json", "realizations", "2,2,2,2,2,2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn precedes_with_witness() {
    let o = run(&["precedes", "1,1,1,1", "2,2,2,2,2,2"]);
    assert!(stdout(&o).starts_with("true\nwitness: "));
    let o = run(&["precedes", "2,2,2,2", "2,2,2,2,2"]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn classify_pentagon() {
    let o = run(&["classify", "--exclude", "C4", "2,2,2,2,2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("excludes: true"));
    assert!(text.contains("classes: SPLIT∘C5"));
    let o = run(&["--json", "classify", "--exclude", "M2", "3,3,3,3,3,3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["excludes"], true);
    assert_eq!(v["classes"], serde_json::json!(["SPLIT∘K3,3"]));
}

#[test]
fn compose_cycle() {
    let o = run(&["compose", "--split", "A_", "--a", "0", "--cycle", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("degrees: (6,3,3,3,3,3,1)\n"));
    let o = run(&["compose", "--split", "A_", "--a", "", "--cycle", "5"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_theorem_passes() {
    let o = run(&["verify", "--claim", "thm-n:4", "--max-vertices", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 counterexamples"));
}

#[test]
fn verify_all_and_mutants() {
    let o = run(&["verify", "--claim", "all", "--max-vertices", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("[FAIL]"));
    for m in [
        "compose-wrong-side",
        "drop-n-plus-2",
        "skip-hypothesis",
        "broken-split-test",
    ] {
        let o = run(&[
            "--json",
            "verify",
            "--claim",
            "all",
            "--max-vertices",
            "7",
            "--mutant",
            m,
        ]);
        assert_eq!(code(&o), 1, "{m}");
        let failing: Vec<serde_json::Value> = stdout(&o)
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
            .filter(|r| !r["counterexamples"].as_array().unwrap().is_empty())
            .collect();
        assert!(!failing.is_empty(), "{m}");
        let first = &failing[0]["counterexamples"][0];
        assert!(first["detail"].is_string());
    }
}

#[test]
fn json_reports_identical_across_thread_counts() {
    let a = run(&[
        "--json",
        "--threads",
        "1",
        "verify",
        "--claim",
        "all",
        "--max-vertices",
        "6",
    ]);
    let b = run(&[
        "--json",
        "--threads",
        "3",
        "verify",
        "--claim",
        "all",
        "--max-vertices",
        "6",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn universe_export_feeds_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u6.g6");
    let o = run(&[
        "universe",
        "--max-vertices",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let lines = std::fs::read_to_string(&path).unwrap().lines().count();
    assert_eq!(lines, 1 + 1 + 2 + 4 + 11 + 34 + 156);
    let o = run(&[
        "verify",
        "--claim",
        "thm-n:4",
        "--max-vertices",
        "6",
        "--graphs-from",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("graphs from"));
    // dropping a graph leaves the universe incomplete
    let text = std::fs::read_to_string(&path).unwrap();
    let short: Vec<&str> = text.lines().skip(1).collect();
    std::fs::write(&path, short.join("\n")).unwrap();
    let o = run(&[
        "verify",
        "--claim",
        "thm-n:4",
        "--max-vertices",
        "6",
        "--graphs-from",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn poset_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let csv = dir.path().join("p.csv");
    let o = run(&[
        "poset",
        "--max-vertices",
        "4",
        "--dot",
        dot.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph exclusion {"));
    assert!(text.trim_end().ends_with('}'));
    let csv = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv.lines().next(), Some("smaller,larger"));
    assert_eq!(code(&run(&["poset", "--max-vertices", "8"])), 2);
}
