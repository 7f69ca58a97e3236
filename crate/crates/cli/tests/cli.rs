use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn mvtop(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mvtop"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const DISCRETE2: &str = r#"{"chain":1,"points":["a","b"],"opens":[[0,0],[0,1],[1,0],[1,1]]}"#;
const INDISCRETE2: &str = r#"{"chain":1,"points":["a","b"],"opens":[[0,0],[1,1]]}"#;

#[test]
fn gen_single_point() {
    let out = mvtop(&["gen"], r#"{"chain":2,"points":["x"],"subbase":[[1]]}"#);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["opens"], serde_json::json!([[0], [1], [2]]));
}

#[test]
fn gen_empty_subbase_gives_indiscrete() {
    let out = mvtop(&["gen"], r#"{"chain":3,"points":["x","y"],"subbase":[]}"#);
    assert_eq!(json(&out)["opens"], serde_json::json!([[0, 0], [3, 3]]));
}

#[test]
fn gen_is_a_fixpoint() {
    let first = mvtop(&["gen"], r#"{"name":"s","chain":2,"points":["x","y"],"subbase":[[1,0],[0,2]]}"#);
    let mut doc = json(&first);
    let opens = doc["opens"].take();
    let again = serde_json::json!({"name":"s","chain":2,"points":["x","y"],"subbase":opens});
    let second = mvtop(&["gen"], &again.to_string());
    assert_eq!(first.stdout, second.stdout);
    // an opens document passes through unchanged
    let third = mvtop(&["gen"], &String::from_utf8(first.stdout.clone()).unwrap());
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn discrete_crisp_space_is_stone() {
    let out = mvtop(&["check", "stone"], DISCRETE2);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verdict"], true);
}

#[test]
fn indiscrete_space_is_not_hausdorff() {
    let out = mvtop(&["check", "hausdorff"], INDISCRETE2);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["details"]["separation"]["inseparable"], serde_json::json!(["a", "b"]));
}

#[test]
fn oracle_and_analytic_compactness_agree() {
    for doc in [
        DISCRETE2,
        INDISCRETE2,
        r#"{"chain":2,"points":["x","y","z"],"subbase":[[2,1,0],[0,1,2]]}"#,
    ] {
        for kind in ["compact", "strong-compact"] {
            let a = json(&mvtop(&["check", kind], doc));
            let o = json(&mvtop(&["check", kind, "--oracle"], doc));
            assert_eq!(a["verdict"], o["verdict"]);
            assert_eq!(a["verdict"], true);
            assert!(o["details"]["covers_checked"].as_u64().unwrap() > 0);
        }
    }
}

#[test]
fn check_topology_reports_violation() {
    let out = mvtop(&["check", "topology"], r#"{"chain":2,"points":["x"],"opens":[[0],[1],[2]]}"#);
    assert_eq!(code(&out), 0);
    let out = mvtop(&["check", "topology"], r#"{"chain":2,"points":["x"],"subbase":[[0],[1]]}"#);
    assert_eq!(code(&out), 1);
    assert!(!json(&out)["details"]["violation"].is_null());
}

#[test]
fn large_subbase_check() {
    let out = mvtop(&["check", "large-subbase"], r#"{"chain":2,"points":["x"],"subbase":[[1],[2]]}"#);
    assert_eq!(code(&out), 0);
    let out = mvtop(&["check", "large-subbase"], r#"{"chain":2,"points":["x"],"subbase":[[1]]}"#);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["details"]["violation"]["multiple"], 2);
}

#[test]
fn zerodim_check() {
    assert_eq!(code(&mvtop(&["check", "zerodim"], DISCRETE2)), 0);
    let out = mvtop(&["check", "zerodim"], r#"{"chain":1,"points":["a","b"],"opens":[[0,0],[0,1],[1,1]]}"#);
    assert_eq!(code(&out), 1);
}

#[test]
fn product_of_discrete_spaces() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", DISCRETE2);
    let out = mvtop(&["product", &a, &a], "");
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["points"].as_array().unwrap().len(), 4);
    assert_eq!(doc["opens"].as_array().unwrap().len(), 16);
    assert_eq!(doc["points"][1], "(a,b)");
}

#[test]
fn product_of_one_space_relabels() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", DISCRETE2);
    let doc = json(&mvtop(&["product", &a], ""));
    assert_eq!(doc["points"], serde_json::json!(["(a)", "(b)"]));
    assert_eq!(doc["opens"], serde_json::json!([[0, 0], [0, 1], [1, 0], [1, 1]]));
}

#[test]
fn product_subbase_only() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", DISCRETE2);
    let b = write(dir.path(), "b.json", INDISCRETE2);
    let doc = json(&mvtop(&["product", "--subbase-only", &a, &b], ""));
    assert!(doc["opens"].is_null());
    // lifts of the opens of both factors, deduplicated: 𝟎, 𝟏, and two lifts from a
    assert_eq!(
        doc["subbase"],
        serde_json::json!([[0, 0, 0, 0], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 1, 1]])
    );
}

#[test]
fn product_rejects_mixed_chains() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", DISCRETE2);
    let b = write(dir.path(), "b.json", r#"{"chain":2,"points":["u"],"subbase":[]}"#);
    assert_eq!(code(&mvtop(&["product", &a, &b], "")), 2);
}

#[test]
fn mincover_examples() {
    let out = mvtop(&["mincover"], r#"{"chain":2,"family":[[1,1],[2,0]]}"#);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["entries"], serde_json::json!([{"set":[1,1],"multiplicity":2}]));
    assert_eq!(doc["total"], 2);

    let doc = json(&mvtop(&["mincover"], r#"{"chain":3,"family":[[3,3]]}"#));
    assert_eq!(doc["total"], 1);

    let out = mvtop(&["mincover"], r#"{"chain":2,"family":[[0,2]]}"#);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["status"], "infeasible");
}

#[test]
fn subcover_example() {
    let out = mvtop(&["subcover"], r#"{"chain":2,"family":[[2,0],[1,1],[0,2],[2,2]]}"#);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["size"], 1);
    assert_eq!(doc["members"], serde_json::json!([[2, 2]]));
}

#[test]
fn metric_two_points() {
    let doc = r#"{"chain":2,"points":["p","q"],"scale":1,"dist":[[0,1],[1,0]]}"#;
    let out = mvtop(&["metric"], doc);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["opens"].as_array().unwrap().len(), 9);
    let balls = json(&mvtop(&["metric", "--subbase-only"], doc));
    assert!(balls["subbase"].is_array());
    assert_eq!(code(&mvtop(&["metric"], r#"{"chain":2,"points":["p","q"],"scale":1,"dist":[[0,1],[2,0]]}"#)), 2);
}

#[test]
fn continuity_inline_and_by_path() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "d.json", DISCRETE2);
    write(dir.path(), "i.json", INDISCRETE2);
    let swap = write(dir.path(), "m.json", r#"{"domain":"d.json","codomain":"d.json","map":[1,0]}"#);
    let out = mvtop(&["continuity", &swap], "");
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["homeomorphism"], true);

    let into = write(dir.path(), "n.json", r#"{"domain":"i.json","codomain":"d.json","map":[0,1]}"#);
    let out = mvtop(&["continuity", &into], "");
    assert_eq!(code(&out), 1);
    assert!(!json(&out)["violation"].is_null());

    let inline = format!(r#"{{"domain":{DISCRETE2},"codomain":{INDISCRETE2},"map":[0,1]}}"#);
    assert_eq!(code(&mvtop(&["continuity"], &inline)), 0);
}

#[test]
fn verify_suites_from_examples() {
    let out = mvtop(&["verify", "algebra", "--seed", "42", "--cases", "1000"], "");
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let out = mvtop(&["verify", "tychonoff", "--seed", "7", "--cases", "50"], "");
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let out = mvtop(&["verify", "lemma1", "--seed", "1", "--cases", "40"], "");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rejected: 4"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&mvtop(&["verify", "nope"], "")), 2);
    assert_eq!(code(&mvtop(&["gen"], "{not json")), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":2,"points":["x"]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":2,"points":["x"],"subbase":[],"opens":[]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":2,"points":["x"],"subbase":[[3]]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":2,"points":["x","y"],"subbase":[[1]]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":0,"points":["x"],"subbase":[]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":1,"points":["x","x"],"subbase":[]}"#)), 2);
    assert_eq!(code(&mvtop(&["gen"], r#"{"chain":1,"points":["x"],"subbase":[],"extra":1}"#)), 2);
    assert_eq!(code(&mvtop(&["check", "hausdorff"], r#"{"chain":1,"points":["x"],"opens":[[1]]}"#)), 2);
    assert_eq!(code(&mvtop(&["bogus"], "")), 2);
}

#[test]
fn caps_exit_3() {
    let doc = r#"{"chain":4,"points":["x","y","z"],"subbase":[[1,2,0],[0,1,3]]}"#;
    assert_eq!(code(&mvtop(&["--max-opens", "5", "gen"], doc)), 3);
    let capped = r#"{"chain":4,"points":["x","y","z"],"subbase":[[1,2,0],[0,1,3]],"caps":{"max_opens":5}}"#;
    assert_eq!(code(&mvtop(&["gen"], capped)), 3);
    // flags override document caps
    assert_eq!(code(&mvtop(&["--max-opens", "20000", "gen"], capped)), 0);
    let fam = r#"{"chain":3,"family":[[1,0,0,2],[0,1,2,0],[2,0,1,0],[0,2,0,1],[1,1,1,1],[0,0,3,0]]}"#;
    assert_eq!(code(&mvtop(&["--max-nodes", "2", "mincover"], fam)), 3);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = mvtop(&["gen", "-o", path.to_str().unwrap()], r#"{"chain":1,"points":["x"],"subbase":[]}"#);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(path).unwrap().contains("\"opens\""));
}

#[test]
fn sequential_and_parallel_runs_agree() {
    for suite in ["generation", "stone-product"] {
        let a = mvtop(&["verify", suite, "--seed", "5", "--cases", "40"], "");
        let b = mvtop(&["--sequential", "verify", suite, "--seed", "5", "--cases", "40"], "");
        assert_eq!(a.stdout, b.stdout);
    }
}
