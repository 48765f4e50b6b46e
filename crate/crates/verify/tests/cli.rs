use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fermat-verify"))
}

#[test]
fn quick_suite_report_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.jsonl"), dir.path().join("b.jsonl")];
    for p in &paths {
        let st = bin().args(["run", "--n", "3", "--suite", "quick", "--out"]).arg(p).status().unwrap();
        assert!(st.success());
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let text = String::from_utf8(a).unwrap();
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["fail"], 0);
    assert_eq!(last["primes"]["3"], serde_json::json!([10009, 10039]));
    for line in text.lines().filter(|l| l.contains("check_id")) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(["pass", "paper-discrepancy"].contains(&v["status"].as_str().unwrap()), "{line}");
        assert_eq!(v["wall_ms"], 0);
    }
}

#[test]
fn explicit_primes_and_text_format() {
    let out = bin().args(["run", "--n", "3", "--suite", "C7", "--prime", "10009,10039", "--format", "text"]).output().unwrap();
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("paper-discrepancy  numerator consistent: true; mu = 3"), "{s}");
    // 10007 is not 1 mod 3
    let bad = bin().args(["run", "--n", "3", "--prime", "10007,10009"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn compute_commands() {
    let out = bin().args(["compute", "symbolic-power", "--n", "3", "--m", "2"]).output().unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("multiplicity: 36") && s.contains("regularity: 8"), "{s}");
    let out = bin().args(["compute", "betti", "--n", "3", "--power", "ordinary:1"]).output().unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("F1 shifts: 6 6") && s.contains("regularity: 5"), "{s}");
    let out = bin().args(["compute", "betti", "--n", "3", "--power", "cubic:2"]).output().unwrap();
    assert!(!out.status.success());
}
