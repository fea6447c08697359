use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn matchlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, spec: &str, name: &str) -> String {
    let path = dir.join(name).to_str().unwrap().to_string();
    let o = matchlat(&["gen", spec, "--out", &path]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn gen_writes_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let p22 = gen_to(dir.path(), "P(2,2)", "p22.json");
    let g: Value = serde_json::from_str(&std::fs::read_to_string(p22).unwrap()).unwrap();
    assert_eq!(g["vertices"].as_array().unwrap().len(), 16);
    assert!(g["outer_face"].is_u64());

    let t2 = json(&matchlat(&["gen", "T(2)"]));
    assert_eq!(t2["vertices"].as_array().unwrap().len(), 14);
    let tree = json(&matchlat(&["gen", "tree:1>2,1>3"]));
    assert_eq!(
        tree["rotation"].as_object().unwrap().len(),
        tree["vertices"].as_array().unwrap().len()
    );

    let dot = stdout(&matchlat(&["gen", "L(1)", "--format", "dot"]));
    assert!(dot.starts_with("graph G {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gen", "link:L(1)+L(2,1)"][..],
        &["verify", "decomposition", "--format", "json"][..],
    ] {
        assert_eq!(matchlat(args).stdout, matchlat(args).stdout);
    }
}

#[test]
fn analyze_targets() {
    let dir = tempfile::tempdir().unwrap();
    let hex = gen_to(dir.path(), "L(1)", "hexagon.json");
    let m = json(&matchlat(&["analyze", &hex, "matchings"]));
    assert_eq!(m["count"], 2);

    let p22 = gen_to(dir.path(), "P(2,2)", "p22.json");
    let d = json(&matchlat(&["analyze", &p22, "decompose"]));
    assert_eq!(d["factors"].as_array().unwrap().len(), 1);
    assert_eq!(d["factors"][0]["size"], 6);
    assert!(d["central_elements"].as_array().unwrap().is_empty());

    let linked = gen_to(dir.path(), "link:L(1)+L(1,1)", "linked.json");
    let d = json(&matchlat(&["analyze", &linked, "decompose"]));
    let sizes: Vec<u64> = d["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [2, 3]);
    assert_eq!(d["central_elements"].as_array().unwrap().len(), 2);

    let l = json(&matchlat(&["analyze", &p22, "lattice"]));
    assert_eq!(l["elements"].as_array().unwrap().len(), 6);
    assert_eq!(l["covers"].as_array().unwrap().len(), 6);
    assert_eq!(l["rank"].as_array().unwrap().len(), 6);
    let dot = stdout(&matchlat(&["analyze", &p22, "lattice", "--format", "dot"]));
    assert!(dot.contains("rank=same"));

    let z = json(&matchlat(&["analyze", &p22, "zdig"]));
    assert_eq!(z["arcs"].as_array().unwrap().len(), 6);

    let tree = gen_to(dir.path(), "tree:a>b,c>b", "tree.json");
    let f = json(&matchlat(&["analyze", &tree, "faceposet"]));
    assert_eq!(f["elements"].as_array().unwrap().len(), 3);
    assert_eq!(f["covers"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(matchlat(&["gen", "Q(3)"]).status.code(), Some(2));
    assert_eq!(matchlat(&["gen", "L(1,2)"]).status.code(), Some(2));
    assert_eq!(
        matchlat(&["analyze", "/nonexistent.json", "zdig"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(matchlat(&["verify", "everything"]).status.code(), Some(2));

    let p33 = gen_to(dir.path(), "P(3,3)", "p33.json");
    let capped = matchlat(&["analyze", &p33, "matchings", "--cap-matchings", "5"]);
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(
        matchlat(&["gen", "P(3,3)", "--cap-vertices", "8"])
            .status
            .code(),
        Some(3)
    );

    // the hexagonal system is not outerplane
    assert_eq!(
        matchlat(&["analyze", &p33, "faceposet"]).status.code(),
        Some(2)
    );

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\": []").unwrap();
    assert_eq!(
        matchlat(&["analyze", bad.to_str().unwrap(), "matchings"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let core = matchlat(&["verify", "core"]);
    assert_eq!(core.status.code(), Some(0));
    assert!(stdout(&core).contains("PASS ztransform.path_invariance [L(1)]"));

    let dir = tempfile::tempdir().unwrap();
    let hex = gen_to(dir.path(), "L(1)", "c6.json");
    let on_file = matchlat(&["verify", "core", "--graph", &hex, "--format", "json"]);
    assert_eq!(on_file.status.code(), Some(0));
    let report = json(&on_file);
    assert_eq!(report["totals"]["fail"], 0);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["claim"] == "zdigraph.acyclic_hasse" && c["status"] == "pass"));

    for suite in ["parallelogram", "outerplane", "decomposition"] {
        let o = matchlat(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn verify_reports_failures_with_exit_one() {
    // a path on three vertices has no perfect matching, so no claim can hold
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.json");
    std::fs::write(
        &path,
        r#"{"vertices":[{"id":0,"color":"white"},{"id":1,"color":"black"},
            {"id":2,"color":"black"}],
            "edges":[[0,1],[0,2]],
            "rotation":{"0":[0,1],"1":[0],"2":[1]}}"#,
    )
    .unwrap();
    let o = matchlat(&["verify", "core", "--graph", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL zdigraph.build"), "{text}");
    assert!(text.contains("no perfect matching"), "{text}");
}
