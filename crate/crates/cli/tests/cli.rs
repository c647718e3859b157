use std::path::PathBuf;
use std::process::Command;

use bihom_cli::{run, Outcome};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn bihom(args: &[&str]) -> Outcome {
    run(std::iter::once("bihom").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = bihom(&full);
    let v = serde_json::from_str(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", out.stdout, out.stderr));
    (out.code, v)
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_bihom");
    let status = |args: &[&str]| Command::new(exe).args(args).output().unwrap();
    let ok = status(&["--input", &data("virasoro_ns.alg"), "check"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("bihom-report/1 check\nverdict: ok\n"));
    assert_eq!(status(&["--input", &data("virasoro_f_eq_d.alg"), "check"]).status.code(), Some(1));
    let bad = status(&["--input", &data("malformed.alg"), "check"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 3, column 30"));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
    assert_eq!(status(&["--version"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["check"],
        vec!["--builtin", "ex25", "check", "--bogus"],
        vec!["--builtin", "nope", "check"],
        vec!["--input", "/nonexistent/file.alg", "check"],
        vec!["--builtin", "ex25", "check", "--name", "missing"],
        vec!["--builtin", "ex25", "twist", "--alpha", "missing", "--beta", "missing"],
        vec!["--builtin", "ex25", "--builtin", "ex25", "check"],
        vec!["--builtin", "ex25", "d2check", "--n", "one", "--deg", "1"],
    ] {
        let out = bihom(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_reports_have_the_schema_header_and_are_stable() {
    let args = ["--builtin", "virasoro_ns", "d2check", "--n", "1", "--deg", "1"];
    let (code, v) = json(&args);
    assert_eq!(code, 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().take(3).collect();
    assert_eq!(keys, ["schema", "command", "ok"]);
    assert_eq!(v["schema"], "bihom-report/1");
    assert_eq!(v["command"], "d2check");
    assert_eq!(v["ok"], true);
    assert_eq!(v["variant"], "literal");
    let first = bihom(&["--format", "json", "--builtin", "virasoro_ns", "d2check", "--n", "1", "--deg", "1"]);
    let second = bihom(&["--format", "json", "--builtin", "virasoro_ns", "d2check", "--n", "1", "--deg", "1"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.contains("elapsed"));
}

#[test]
fn text_reports_end_with_elapsed_time() {
    let out = bihom(&["--builtin", "ex25", "check"]);
    assert_eq!(out.code, 0);
    let last = out.stdout.lines().last().unwrap();
    assert!(last.starts_with("elapsed: ") && last.ends_with(" ms"), "{last}");
}

#[test]
fn violations_carry_exact_residuals() {
    let (code, v) = json(&["--input", &data("virasoro_f_eq_d.alg"), "check"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    let found = v["check"]["violations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["axiom"] == "bihom-skew-symmetry" && x["tuple"] == "L, L")
        .unwrap();
    assert_eq!(found["residual"], "(d^2 + 4*d*x + 4*x^2)*L");
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let out = bihom(&["--format", "json", "--out", p, "--builtin", "ex25", "check"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "check");
    let bad = bihom(&["--out", "/nonexistent/dir/x", "--builtin", "ex25", "check"]);
    assert_eq!(bad.code, 2);
}

#[test]
fn fmt_reproduces_shipped_files() {
    for name in [
        "virasoro_ns.alg",
        "ex25.alg",
        "cur_gl11.alg",
        "virasoro_f_eq_d.alg",
        "gl11_natural.alg",
        "matrices.alg",
        "ex25_maps.alg",
        "virasoro_twist.alg",
    ] {
        let path = data(name);
        let out = bihom(&["--input", &path, "fmt"]);
        assert_eq!(out.code, 0, "{name}");
        assert_eq!(out.stdout, std::fs::read_to_string(&path).unwrap(), "{name}");
    }
    for (b, file) in [("virasoro_ns", "virasoro_ns.alg"), ("ex25", "ex25.alg"), ("cur_gl11", "cur_gl11.alg")] {
        let out = bihom(&["--builtin", b, "fmt"]);
        assert_eq!(out.stdout, std::fs::read_to_string(data(file)).unwrap(), "{b}");
    }
}

#[test]
fn every_verb_runs_on_the_shipped_files() {
    let gl = data("gl11_natural.alg");
    let mats = data("matrices.alg");
    let maps = data("ex25_maps.alg");
    let vir = data("virasoro_twist.alg");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["--input", &vir, "check"], "check"),
        (vec!["--input", &mats, "check-assoc"], "check-assoc"),
        (vec!["--input", &gl, "check-module", "--module", "natural"], "check-module"),
        (vec!["--input", &vir, "twist", "--alpha", "flip", "--beta", "identity"], "twist"),
        (vec!["--input", &maps, "compose-twist", "--power", "2"], "compose-twist"),
        (vec!["--input", &maps, "compose-twist", "--alpha", "flip", "--beta", "identity"], "compose-twist"),
        (vec!["--builtin", "ex25", "--builtin", "virasoro_ns", "dsum", "--name", "ex25", "--other", "virasoro_ns"], "dsum"),
        (vec!["--input", &gl, "cur", "--name", "gl11"], "cur"),
        (vec!["--input", &gl, "semidirect", "--module", "natural"], "semidirect"),
        (vec!["--input", &mats, "from-assoc"], "from-assoc"),
        (vec!["--input", &gl, "d2check", "--n", "1", "--deg", "1", "--module", "natural"], "d2check"),
        (vec!["--builtin", "ex25", "cocycles", "--n", "1", "--deg", "1", "--parity", "even"], "cocycles"),
        (vec!["--builtin", "ex25", "cohomology-report", "--n", "1", "--deg", "1"], "cohomology-report"),
        (vec!["--builtin", "ex25", "solve-der", "--k", "0", "--l", "0", "--deg", "1"], "solve-der"),
        (vec!["--input", &maps, "classify", "--k", "0", "--l", "0", "--map", "identity"], "classify"),
        (vec!["--input", &gl, "gder-witness", "--k", "0", "--l", "0", "--deg", "0", "--map", "identity"], "gder-witness"),
        (vec!["--input", &gl, "ooperator-check", "--ooperator", "zero"], "ooperator-check"),
        (vec!["--input", &gl, "induced", "--ooperator", "zero"], "induced"),
    ];
    for (args, verb) in cases {
        let (code, v) = json(&args);
        assert_eq!(code, 0, "{args:?}: {v:#}");
        assert_eq!(v["command"], verb);
        assert_eq!(v["ok"], true, "{args:?}");
    }
}

#[test]
fn built_results_reparse() {
    let (_, v) = json(&["--builtin", "ex25", "--builtin", "cur_gl11", "dsum", "--name", "ex25", "--other", "cur_gl11"]);
    let text = v["result"].as_str().unwrap();
    assert!(text.starts_with("algebra ex25_plus_cur_gl11 {"), "{text}");
    let doc = bihom_cli::dsl::parse(text).unwrap();
    assert_eq!(bihom_cli::dsl::serialize(&doc), text);
    let (code, v) = json(&["--builtin", "ex25", "--builtin", "cur_gl11", "dsum", "--as", "sum"]);
    assert_eq!(code, 0);
    assert!(v["result"].as_str().unwrap().starts_with("algebra sum {"));
    let out = bihom(&["--builtin", "ex25", "dsum", "--as", "1bad"]);
    assert_eq!(out.code, 2);
}

#[test]
fn hypothesis_failures_are_violations() {
    let gl = data("gl11_natural.alg");
    let (code, v) = json(&["--input", &gl, "ooperator-check", "--ooperator", "zero"]);
    assert_eq!((code, &v["ok"]), (0, &Value::Bool(true)));
    let (code, v) = json(&["--input", &data("virasoro_f_eq_d.alg"), "d2check", "--n", "0", "--deg", "0"]);
    assert_eq!(code, 1, "{v:#}");
    assert!(v.get("error").is_some());
}
