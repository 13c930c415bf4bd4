//! End-to-end checks of the command-line binary: exit codes, output
//! formats, and byte-identical JSON round-trips.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "--q", "3", "--n", "10"]).status.code(), Some(0));
    // usage errors
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--q", "0", "--n", "10"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--q", "2,1", "--n", "10"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--q", "6", "--n", "6"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", "--q", "3", "--n", "0"]).status.code(), Some(1));
    // profile is a full-orbit (trace-side) computation
    assert_eq!(run(&["profile", "--q", "3,4", "--semantics", "anf"]).status.code(), Some(1));
}

#[test]
fn analyze_text_output() {
    let text = stdout(&["analyze", "--q", "3", "--n", "10", "--format", "text"]);
    assert!(text.contains("weight 480"), "{text}");
    assert!(text.contains("nonlinearity 480"), "{text}");
}

#[test]
fn analyze_json_round_trips_byte_identically() {
    for args in [
        vec!["analyze", "--q", "3,4", "--n", "5..12", "--format", "json"],
        vec!["analyze", "--q", "1,2,3", "--n", "9", "--semantics", "orbit", "--format", "json"],
        vec!["period", "--q", "1,4", "--format", "json"],
        vec!["profile", "--q", "1,2,3", "--format", "json"],
        vec!["classify", "--n", "10", "--format", "json"],
        vec!["minreps", "--n", "8", "--format", "json"],
        vec!["recursion", "--t", "2", "--format", "json"],
    ] {
        let text = stdout(&args);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let reprinted = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(text, reprinted, "round trip for {args:?}");
    }
}

#[test]
fn analyze_is_deterministic() {
    // orbit semantics: n = 4 would reject offset 4 under the default anf
    let args = [
        "analyze", "--q", "1,4", "--n", "3..14", "--semantics", "orbit", "--format", "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn period_output() {
    let text = stdout(&["period", "--q", "1,4", "--format", "text"]);
    assert!(text.contains("period 30"), "{text}");
    let text = stdout(&["period", "--q", "6", "--format", "text"]);
    assert!(text.contains("period 12"), "{text}");
}

#[test]
fn profile_output() {
    let text = stdout(&["profile", "--q", "3,4", "--format", "text"]);
    assert!(text.contains("EXACT_VALUATION(1)"), "{text}");
    assert!(text.contains("n ≡ 2 mod 4"), "{text}");
    let text = stdout(&["profile", "--q", "1,3", "--format", "text"]);
    assert!(text.contains("NEVER"), "{text}");
}

#[test]
fn classify_csv_output() {
    let text = stdout(&["classify", "--n", "12", "--mrs", "--format", "csv"]);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "class,weight,nonlinearity,offsets");
    // 6 single-offset functions fall into 5 classes at n = 12
    assert_eq!(lines.count(), 6);
}

#[test]
fn recursion_matches_weight_sweep() {
    // fitting the full-orbit weight sweep of a single offset recovers the
    // same characteristic polynomial as the closed-form recursion
    let fitted = stdout(&["recursion", "--q", "2", "--n", "5..30", "--format", "text"]);
    let closed = stdout(&["recursion", "--t", "2", "--format", "text"]);
    let charpoly = |s: &str| {
        s.lines()
            .find(|l| l.contains("characteristic polynomial"))
            .unwrap()
            .to_string()
    };
    assert_eq!(charpoly(&fitted), charpoly(&closed));
}

#[test]
fn tracecheck_and_verify_run_clean() {
    let text = stdout(&["tracecheck", "--q", "1,2", "--n", "8", "--format", "text"]);
    assert!(text.contains("agrees"), "{text}");
    let text = stdout(&["verify", "--max-j", "3", "--max-n", "9", "--format", "text"]);
    assert!(text.contains("all consistent"), "{text}");
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join("rsquad-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let direct = stdout(&["analyze", "--q", "3", "--n", "10", "--format", "json"]);
    let out = run(&[
        "analyze", "--q", "3", "--n", "10", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
    std::fs::remove_dir_all(&dir).unwrap();
}
