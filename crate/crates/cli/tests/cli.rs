use std::path::PathBuf;
use std::process::{Command, Output};

use abc_cli::parse_documents;

fn abc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abc"))
        .args(args)
        .output()
        .unwrap()
}

fn write_instance(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("abc-cli-{name}-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

const CUBES: &str = r#"{"id": "cubes", "field": {"kind": "RATIONAL_P_ADIC", "p": 3}, "vars": ["z"],
  "polys": ["z^2", "2*z + 1", "-(z + 1)^2"]}"#;

#[test]
fn unknown_command_is_a_usage_error() {
    let out = abc(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("unknown command") && err.contains("usage"),
        "{err}"
    );
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(abc(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_instance_flag() {
    assert_eq!(abc(&["radical"]).status.code(), Some(1));
}

#[test]
fn parse_errors_carry_a_position() {
    let path = write_instance("bad", "{\"id\": \"x\",\n  \"field\": }");
    let out = abc(&["norm", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("PARSE_ERROR at line 2"), "{err}");
}

#[test]
fn fermat_pair_is_a_hypothesis_violation() {
    let path = write_instance(
        "fermat",
        r#"{"id": "f", "field": {"kind": "PRIME_FIELD", "p": 3}, "vars": ["x", "y"], "polys": ["x^3", "y^3"]}"#,
    );
    let out = abc(&["verify-basic", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("HYPOTHESIS_VIOLATED"));
}

#[test]
fn text_and_machine_reports_agree() {
    let path = write_instance("cubes", CUBES);
    let p = path.to_str().unwrap();
    let text = abc(&["verify-abc1", "--instance", p]);
    let machine = abc(&["verify-abc1", "--instance", p, "--format", "machine"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(machine.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&machine.stdout).unwrap();
    let report = &doc["reports"][0];
    assert_eq!(report["verdict"], "HOLDS");
    assert_eq!(report["id"], "cubes");
    let text = String::from_utf8_lossy(&text.stdout);
    assert!(text.contains("verdict: HOLDS"));
    assert!(text.contains("theorem: abcsum"));
}

#[test]
fn flags_override_instance_parameters() {
    let path = write_instance(
        "trunc",
        r#"{"id": "t", "field": {"kind": "PRIME_FIELD", "p": 2}, "vars": ["x"], "polys": ["x^5*(x+1)^2"], "params": {"ell": 1}}"#,
    );
    let p = path.to_str().unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec!["sqfree", "--instance", p, "--format", "machine"];
        args.extend(extra);
        let out = abc(&args);
        assert_eq!(out.status.code(), Some(0));
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        doc["reports"][0]["results"][0]["result"]["degree"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(run(&[]), 2);
    assert_eq!(run(&["--ell", "3"]), 5);
}

#[test]
fn negative_radii_are_accepted() {
    let path = write_instance("cubes-rho", CUBES);
    let out = abc(&[
        "norm",
        "--instance",
        path.to_str().unwrap(),
        "--rho",
        "-3,-1/2,2",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let samples = doc["reports"][0]["results"][0]["samples"]
        .as_array()
        .unwrap();
    assert_eq!(samples.len(), 3);
    assert_eq!(samples[1][0], "-1/2");
}

#[test]
fn shipped_corpus_round_trips() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/basic_abc.json");
    let items = parse_documents(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(items.len(), 80);
    let again = parse_documents(&abc_cli::instance::corpus_to_text(&items)).unwrap();
    for (a, b) in items.iter().zip(&again) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.polys, b.polys);
        assert_eq!(a.params.extra, b.params.extra);
    }
}

#[test]
fn corpus_run_respects_count() {
    let out = abc(&[
        "corpus-run",
        "--seed",
        "3",
        "--count",
        "4",
        "--format",
        "machine",
    ]);
    assert_ne!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["reports"].as_array().unwrap().len(), 4);
    assert_eq!(doc["header"]["seed"], 3);
}
