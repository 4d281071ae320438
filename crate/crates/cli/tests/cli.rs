//! End-to-end runs of the `cocover` binary. Golden files live in
//! `tests/golden`; set `COCOVER_UPDATE_GOLDEN=1` to regenerate them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cocover"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str, actual: &str) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("COCOVER_UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(actual, expected, "output differs from {name}");
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn build_path_coalgebra_of_a_to_b() {
    let ab = data("ab.qv");
    let out = run(&["build", "--quiver", ab.to_str().unwrap(), "--field", "q"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(json(&text)["labels"].as_array().unwrap().len(), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("dim 3 over q: valid"));
    golden("ab.json", &text);
}

#[test]
fn build_families() {
    let m2 = stdout(&["build", "--family", "matrix:2"]);
    assert_eq!(json(&m2)["eps"].as_array().unwrap().len(), 4);
    golden("matrix2.json", &m2);
    let dp = stdout(&["build", "--family", "dividedpower:3", "--field", "fp:2"]);
    assert_eq!(json(&dp)["field"], "fp:2");
    assert_eq!(json(&dp)["labels"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ab.json");
    let ab = data("ab.qv");
    let out = run(&["build", "--quiver", ab.to_str().unwrap(), "-o", file.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let first = fs::read_to_string(&file).unwrap();
    assert_eq!(stdout(&["build", "--quiver", ab.to_str().unwrap()]), first);
    let f = file.to_str().unwrap();
    let from_file = stdout(&["cover", f, "--json"]);
    assert_eq!(from_file, stdout(&["cover", "--quiver", ab.to_str().unwrap(), "--json"]));
    assert_eq!(stdout(&["report", f, "--json"]), stdout(&["report", f, "--json"]));
}

#[test]
fn report_flags() {
    let ab = data("ab.qv");
    let r = json(&stdout(&["report", "--quiver", ab.to_str().unwrap(), "--json"]));
    assert_eq!(r["non_singular"], true);
    assert_eq!(r["hereditary"], true);
    assert_eq!(r["cosemisimple"], false);

    let m2 = json(&stdout(&["report", "--family", "matrix:2", "--json"]));
    for flag in ["non_singular", "cosemisimple", "cosemiprime", "hereditary", "coprime_simple", "self_injective_dual"] {
        assert_eq!(m2[flag], true, "{flag}");
    }
    let dp = json(&stdout(&["report", "--family", "dividedpower:3", "--json"]));
    assert_eq!(dp["non_singular"], false);

    golden("ab_report.txt", &stdout(&["report", "--quiver", ab.to_str().unwrap()]));
}

#[test]
fn cover_of_a_to_b_is_the_matrix_coalgebra() {
    let ab = data("ab.qv");
    let text = stdout(&["cover", "--quiver", ab.to_str().unwrap(), "--json"]);
    let c = json(&text);
    assert_eq!(c["D"]["labels"].as_array().unwrap().len(), 4);
    assert_eq!(c["kernel_basis"].as_array().unwrap().len(), 1);
    for flag in ["surjective", "kernel_small", "codense", "maximal_checked"] {
        assert_eq!(c["flags"][flag], true, "{flag}");
    }
    golden("ab_cover.json", &text);
}

#[test]
fn self_covers() {
    for family in ["matrix:1", "matrix:2", "matrix:3", "dividedpower:4"] {
        let built = json(&stdout(&["build", "--family", family]));
        let c = json(&stdout(&["cover", "--family", family, "--json"]));
        assert_eq!(c["D"], built, "{family}");
        assert!(c["kernel_basis"].as_array().unwrap().is_empty(), "{family}");
    }
}

#[test]
fn verify_corpus_and_oracles() {
    let ab = data("ab.qv");
    let out = stdout(&[
        "verify",
        "--quiver",
        ab.to_str().unwrap(),
        "--family",
        "triangular",
        "--family",
        "matrix:2",
        "--family",
        "dividedpower:3",
    ]);
    assert!(!out.contains("COUNTEREXAMPLE"));
    assert_eq!(out.matches("nonsingular_equivalences  ok").count(), 4);

    let oracle = stdout(&["verify", "--family", "dividedpower:3", "--family", "matrix:2", "--field", "fp:2", "--oracle"]);
    assert!(oracle.contains("agrees") && !oracle.contains("DISAGREES"));
    let j = json(&stdout(&["verify", "--family", "matrix:2", "--field", "fp:2", "--oracle", "--json"]));
    assert_eq!(j["entries"][0]["name"], "matrix:2");
    assert!(j["oracles"][0]["checks"].as_array().unwrap().iter().all(|c| c["agrees"] == true));
}

#[test]
fn exit_codes() {
    // Usage and parse errors.
    assert_eq!(run(&["build"]).status.code(), Some(1));
    assert_eq!(run(&["build", "--family", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["build", "--family", "matrix:2", "--field", "fp:4"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--family", "matrix:2", "--oracle"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"field\": \"q\",\n \"labels\": [}").unwrap();
    let out = run(&["report", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    // A cyclic quiver needs a length bound: a precondition, not a usage error.
    let lp = data("loop.qv");
    assert_eq!(run(&["build", "--quiver", lp.to_str().unwrap()]).status.code(), Some(2));
    let bounded = stdout(&["build", "--quiver", lp.to_str().unwrap(), "--maxlen", "2"]);
    assert_eq!(json(&bounded)["labels"].as_array().unwrap().len(), 3);
    // --help succeeds.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
