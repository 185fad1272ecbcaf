use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ladder-ainv"));
    for arg in args {
        if arg.ends_with(".json") {
            cmd.arg(dir().join("data").join(arg));
        } else {
            cmd.arg(arg);
        }
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

const CASES: &[(&str, &[&str])] = &[
    ("a_invariant_corner_ladder", &["a-invariant", "corner_ladder.json"]),
    ("a_invariant_corner_ladder_json", &["a-invariant", "--json", "corner_ladder.json"]),
    ("a_invariant_two_sided", &["a-invariant", "two_sided.json"]),
    ("max_turns_corner_ladder", &["max-turns", "corner_ladder.json"]),
    ("max_turns_two_sided", &["max-turns", "two_sided.json"]),
    ("slalom_running_example", &["slalom", "running_example.json"]),
    ("slalom_one_gate", &["slalom", "one_gate.json"]),
    ("render_two_sided", &["render", "two_sided.json"]),
    ("render_running_example", &["render", "running_example.json"]),
    ("oracle_square", &["oracle", "square.json"]),
    ("hilbert_square", &["hilbert", "--coeffs", "8", "square.json"]),
    ("validate_two_sided", &["validate", "two_sided.json"]),
];

#[test]
fn outputs_match_golden_files() {
    for (name, args) in CASES {
        let expected = std::fs::read_to_string(dir().join("golden").join(format!("{name}.out")))
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(stdout_of(args), expected, "golden file {name}");
    }
}

#[test]
fn corner_ladder_values() {
    let text = stdout_of(&["a-invariant", "corner_ladder.json"]);
    assert!(text.contains("a-invariant: -51"), "{text}");
    assert!(text.contains("t: 14, 12, 10"), "{text}");

    let json: serde_json::Value =
        serde_json::from_str(&stdout_of(&["a-invariant", "--json", "corner_ladder.json"])).unwrap();
    assert_eq!(json["value"], -51);
    assert_eq!(json["t"], serde_json::json!([14, 12, 10]));
}

#[test]
fn two_sided_values() {
    let text = stdout_of(&["a-invariant", "two_sided.json"]);
    assert!(text.contains("a-invariant: -54"), "{text}");
    assert!(text.contains("t: 3, 4, 5"), "{text}");
}

#[test]
fn running_example_scan() {
    let text = stdout_of(&["slalom", "running_example.json"]);
    assert!(
        text.contains("P3: (1,-1) (7,1)_S (11,-1)_T (20,0)_S (26,-2)_ST\n"),
        "{text}"
    );
    assert!(text.contains("max NE-turns: 9\n"), "{text}");
}

#[test]
fn verify_agrees_with_oracle() {
    let text = stdout_of(&["a-invariant", "--verify", "corner_ladder.json"]);
    assert!(text.contains("verify: ok"), "{text}");
}

#[test]
fn exit_codes() {
    let out = run(&["a-invariant", "bad_minor.json"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("u must be strictly increasing"), "{err}");

    let out = run(&["a-invariant", "endpoint_outside.json"]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["oracle", "--budget", "5", "corner_ladder.json"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["a-invariant", "missing.json"]);
    assert_eq!(out.status.code(), Some(1));
}
