use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster")).args(args).output().unwrap()
}

fn cluster_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cluster"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_cluster_numbers() {
    for (ty, n) in [("A3", "14"), ("B3", "20"), ("D4", "50"), ("E8", "25080"), ("F4", "105"), ("G2", "8")] {
        let o = cluster(&["count", ty]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), n);
    }
}

#[test]
fn mutate_reads_a_seed_from_stdin() {
    let seed = r#"{"m": 2, "n": 2, "ex": [1, 2], "matrix": [[0, 1], [-1, 0]]}"#;
    let o = cluster_stdin(&["mutate", "--seed", "-", "--dirs", "1,2,1,2,1"], seed);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // Five mutations in A2 return to the initial cluster with x1, x2 swapped.
    assert_eq!(json["variables"], serde_json::json!(["x2", "x1"]));
}

#[test]
fn explore_formats() {
    let o = cluster(&["explore", "--type", "A2", "--format", "text"]);
    assert_eq!(stdout(&o), "seeds 5\nedges 5\ncomplete true\n");
    let o = cluster(&["explore", "--rank2", "1,2"]);
    assert!(stdout(&o).starts_with("graph exchange {"));
    let o = cluster(&["explore", "--matrix", "[[0,1],[-1,0]]", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["seeds"].as_array().unwrap().len(), 5);
    assert_eq!(json["complete"], true);
}

#[test]
fn polytope_and_triangulate() {
    let o = cluster(&["polytope", "A3", "--format", "text"]);
    assert_eq!(stdout(&o), "vertices 14\nedges 21\nfacets 9\n");
    let o = cluster(&["polytope", "A2"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = cluster(&["triangulate", "--flip-graph", "3", "--format", "text"]);
    assert_eq!(stdout(&o), "triangulations 14\nflips 21\n");
    let o = cluster(&["triangulate", "3; d1=[1,3]; d2=[3,6]; d3=[4,6]", "--format", "json"]);
    assert!(o.status.success());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["m"], 9);
}

#[test]
fn exit_codes() {
    assert_eq!(cluster(&["count", "H3"]).status.code(), Some(2));
    assert_eq!(cluster(&["polytope", "A3", "--support", "1,1,2"]).status.code(), Some(1));
    assert_eq!(cluster(&["tp-check", "--matrix", "[[1,2],[3,4]]", "--word", "1,-1"]).status.code(), Some(1));
    assert_eq!(cluster(&["triangulate", "3; d1=[1,3]; d2=[2,5]; d3=[4,6]"]).status.code(), Some(2));
    assert_eq!(cluster(&["mutate", "--seed", "/nonexistent.json", "--dirs", "1"]).status.code(), Some(2));
    assert_eq!(cluster(&["count"]).status.code(), Some(2));
}

#[test]
fn verify_single_criterion() {
    let o = cluster(&["verify", "--only", "4,11"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 2, "{out}");
}
