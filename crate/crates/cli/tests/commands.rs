use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: TempDir::new().unwrap() }
    }

    fn file(&self, name: &str, value: &Value) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, serde_json::to_string(value).unwrap()).unwrap();
        path
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepgraph")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn cuntz2() -> Value {
    json!({
        "vertices": ["v"],
        "edges": [{"id": "a", "src": "v", "dst": "v"}, {"id": "b", "src": "v", "dst": "v"}],
        "separation": {"v": [["a"], ["b"]]}
    })
}

fn e12() -> Value {
    json!({
        "vertices": ["v", "w"],
        "edges": [
            {"id": "e1", "src": "v", "dst": "w"},
            {"id": "e2", "src": "v", "dst": "w"},
            {"id": "f1", "src": "v", "dst": "w"}
        ],
        "separation": {"v": [["e1", "e2"], ["f1"]], "w": []}
    })
}

fn swap() -> (Value, Value) {
    let graph = json!({
        "vertices": ["v", "w"],
        "edges": [{"id": "a", "src": "v", "dst": "w"}, {"id": "b", "src": "w", "dst": "v"}],
        "separation": {"v": [["a"]], "w": [["b"]]}
    });
    let action = json!({
        "group": {"type": "zmod", "n": 2},
        "table": {
            "0": {"vertices": {"v": "v", "w": "w"}, "edges": {"a": "a", "b": "b"}},
            "1": {"vertices": {"v": "w", "w": "v"}, "edges": {"a": "b", "b": "a"}}
        }
    });
    (graph, action)
}

#[test]
fn cayley_of_z3() {
    let out: Value = serde_json::from_str(&ok(&["cayley", "--group", "zmod:3", "--generators", "1"])).unwrap();
    assert_eq!(out["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(out["edges"].as_array().unwrap().len(), 3);
    for sets in out["separation"].as_object().unwrap().values() {
        let sets = sets.as_array().unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].as_array().unwrap().len(), 1);
    }
}

#[test]
fn reduce_cancels_to_the_range() {
    let ws = Workspace::new();
    let g = ws.file("g.json", &e12());
    let g = g.to_str().unwrap();
    assert_eq!(ok(&["--graph", g, "reduce", "e1* e1"]), "1 * @w");
    assert_eq!(ok(&["--graph", g, "reduce", "e1* e2"]), "0");
    assert_eq!(ok(&["--graph", g, "reduce", "e1 e1*"]), "1 * @v - 1 * e2 e2*");
    let choice = ws.file("ex.json", &json!({"v": ["e2"]}));
    assert_eq!(
        ok(&["--graph", g, "--ex-choice", choice.to_str().unwrap(), "reduce", "e2 e2*"]),
        "1 * @v - 1 * e1 e1*"
    );
}

#[test]
fn algebra_commands() {
    let ws = Workspace::new();
    let g = ws.file("g.json", &e12());
    let g = g.to_str().unwrap();
    assert_eq!(ok(&["--graph", g, "mul", "e1", "e1*"]), "1 * @v - 1 * e2 e2*");
    assert_eq!(ok(&["--graph", g, "star", "1/2i * e1 f1*"]), "-1/2i * f1 e1*");
    assert_eq!(ok(&["--graph", g, "expect", "e2 e2*"]), "1/2 * @v");
    assert_eq!(ok(&["--graph", g, "expect", "e1 f1*"]), "0");
}

#[test]
fn expectation_of_a_cuntz_generator_is_zero() {
    let ws = Workspace::new();
    let g = ws.file("a2.json", &cuntz2());
    assert_eq!(ok(&["--graph", g.to_str().unwrap(), "expect", "a"]), "0");
    assert_eq!(ok(&["--graph", g.to_str().unwrap(), "expect", "a a*"]), "1 * @v");
}

#[test]
fn grade_splits_by_degree() {
    let ws = Workspace::new();
    let g = ws.file("g.json", &e12());
    let l = ws.file("l.json", &json!({"e1": "1", "e2": "0", "f1": "2"}));
    let out = ok(&[
        "--graph", g.to_str().unwrap(), "--label", l.to_str().unwrap(), "--group", "zmod:3",
        "grade", "e1 + e2 + f1* e1 + @v",
    ]);
    let parts: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parts, json!({"0": "1 * @v + 1 * e2", "1": "1 * e1", "2": "1 * f1* e1"}));
}

#[test]
fn skew_quotient_and_gross_tucker() {
    let ws = Workspace::new();
    let (graph, action) = swap();
    let g = ws.file("g.json", &graph);
    let a = ws.file("a.json", &action);
    let (g, a) = (g.to_str().unwrap(), a.to_str().unwrap());
    let q: Value = serde_json::from_str(&ok(&["--graph", g, "--action", a, "quotient"])).unwrap();
    assert_eq!(q["vertices"], json!(["v"]));
    assert_eq!(q["edges"], json!([{"id": "a", "src": "v", "dst": "v"}]));
    let gt: Value = serde_json::from_str(&ok(&["--graph", g, "--action", a, "gross-tucker"])).unwrap();
    assert_eq!(gt["label"], json!({"a": 1}));
    assert_eq!(gt["equivariant"], json!(true));
    assert_eq!(ok(&["--graph", g, "--action", a, "act", "a b", "--element", "1"]), "1 * b a");

    let lbl = ws.file("l.json", &gt["label"]);
    let qg = ws.file("q.json", &gt["quotient"]);
    let skew: Value = serde_json::from_str(&ok(&[
        "--graph", qg.to_str().unwrap(), "--label", lbl.to_str().unwrap(), "--group", "zmod:2", "skew",
    ]))
    .unwrap();
    assert_eq!(skew["vertices"], json!(["v@0", "v@1"]));
    assert_eq!(skew["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_crossed_iso_reports_and_is_deterministic() {
    let ws = Workspace::new();
    let g = ws.file("g.json", &e12());
    let l = ws.file("l.json", &json!({"e1": "1", "e2": "0", "f1": "1"}));
    let grp = ws.file("grp.json", &json!({"type": "zmod", "n": 2}));
    let args = [
        "--graph", g.to_str().unwrap(), "--label", l.to_str().unwrap(), "--group", grp.to_str().unwrap(),
        "--samples", "40", "--seed", "9", "verify-crossed-iso",
    ];
    let first = ok(&args);
    assert!(first.ends_with("PASS"), "{first}");
    assert_eq!(ok(&args), first);
    let out = run(&args[..args.len() - 3].iter().chain(&["verify-crossed-iso"]).copied().collect::<Vec<_>>());
    assert_eq!(out.status.code(), Some(2), "the seed is required");
}

#[test]
fn validate_reports_violations() {
    let ws = Workspace::new();
    let good = ws.file("good.json", &e12());
    let out: Value = serde_json::from_str(&ok(&["--graph", good.to_str().unwrap(), "validate"])).unwrap();
    assert_eq!(out["valid"], json!(true));
    let mut bad = e12();
    bad["separation"]["v"] = json!([["e1", "e2"]]);
    let bad = ws.file("bad.json", &bad);
    let out = run(&["--graph", bad.to_str().unwrap(), "validate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("f1"));
    let out = run(&["--graph", bad.to_str().unwrap(), "reduce", "e1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_two() {
    let ws = Workspace::new();
    let g = ws.file("g.json", &e12());
    let g = g.to_str().unwrap();
    let out = run(&["--graph", g, "reduce", "e1 + zz"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 6") && err.contains("zz"), "{err}");
    assert_eq!(run(&["reduce", "e1"]).status.code(), Some(2));
    assert_eq!(run(&["cayley", "--group", "z", "--generators", "1"]).status.code(), Some(2));
    let broken = ws.dir.path().join("broken.json");
    std::fs::write(&broken, "{\"vertices\": [\n  \"v\",\n}").unwrap();
    let out = run(&["--graph", broken.to_str().unwrap(), "validate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn selftest_passes() {
    let out = ok(&["selftest"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 10, "{out}");
}
