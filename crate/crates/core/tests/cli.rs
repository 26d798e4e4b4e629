use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poset-balance"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn count_and_matrix() {
    let o = run(&["count", "--figure", "fig1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "15");

    let o = run(&["matrix", "--figure", "fig1"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().next().unwrap(), "0,9,15,15,15,15");
    assert_eq!(csv.lines().count(), 6);

    let o = run(&["count", "--perm", "41325"]);
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn balance_from_json_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    std::fs::write(&path, r#"{"n": 3, "covers": [[1, 2]]}"#).unwrap();
    let file = path.to_str().unwrap();

    let o = run(&["--json", "balance", "--input", file]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["delta"], "1/3");
    assert_eq!(v["balanced_pairs"], serde_json::json!([[1, 3], [2, 3]]));

    assert!(run(&["balance", "--input", file, "--alpha", "1/3"])
        .status
        .success());
    assert_eq!(
        run(&["balance", "--input", file, "--alpha", "2/5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["balance", "--input", file, "--alpha", "3/5"])
            .status
            .code(),
        Some(2)
    );

    let o = run(&["balance", "--input", file, "--pair", "2,3"]);
    assert!(stdout(&o).contains("P(2 before 3) = 1/3"));
}

#[test]
fn malformed_input_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "covers": [[1, 2], [2, 1]]}"#).unwrap();
    let o = run(&["count", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle"));

    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(
        run(&["count", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--perm", "4133"]).status.code(), Some(2));
}

#[test]
fn size_guards_refuse() {
    let o = run(&["search", "scan", "--n", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("9"));
    assert_eq!(
        run(&["lattice", "subspace", "--n", "2", "--q", "4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn detect_certificates() {
    let o = run(&["--json", "detect", "--perm", "41325", "--kind", "inversion"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["certificates"],
        serde_json::json!([{"kind": "inversion_pattern_pair", "pair": [3, 2], "bound": "1/2"}])
    );

    let o = run(&["detect", "--figure", "fig4-P", "--kind", "auto"]);
    assert!(stdout(&o).contains("auto_2cycle (1,2) bound 1/2"));

    assert_eq!(
        run(&["detect", "--figure", "fig1", "--kind", "inversion"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn shape_report() {
    let o = run(&["shape", "--shape", "4,4,2"]);
    let out = stdout(&o);
    assert!(out.contains("6 5 3 2"));
    assert!(out.contains("standard tableaux: 252"));
    assert!(out.contains("almost twin pair: (1,2) (2,1)"));

    let o = run(&["--json", "shape", "--skew", "8,6,5,3,2/6,3", "--shifted"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["almost_twin"]["pair"],
        serde_json::json!(["(2,5)", "(3,3)"])
    );
}

#[test]
fn lattices() {
    let o = run(&["lattice", "boolean", "--n", "3"]);
    let out = stdout(&o);
    assert!(out.starts_with("8 elements"));
    assert!(out.contains("P({1} before {2}) = 1/2"));

    let o = run(&["lattice", "partition", "--n", "4"]);
    assert!(stdout(&o).contains("P(13/2/4 before 1/23/4) = 1/2"));

    let o = run(&["lattice", "ideals", "--figure", "fig6-P"]);
    assert!(stdout(&o).contains("e = 14"));

    let o = run(&["lattice", "boolean", "--n", "2", "--dot"]);
    assert!(stdout(&o).starts_with("digraph hasse {"));
}

#[test]
fn search_writes_lines_and_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let ckpt = dir.path().join("scan.ckpt");
    let args = [
        "search",
        "scan",
        "--n",
        "4",
        "--out",
        out.to_str().unwrap(),
        "--checkpoint",
        ckpt.to_str().unwrap(),
    ];
    let o = run(&args);
    assert!(o.status.success());
    assert!(stdout(&o).contains("16 classes"));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 16);
    assert_eq!(std::fs::read_to_string(&ckpt).unwrap().lines().count(), 16);

    // resuming recomputes nothing but reports the same summary
    let o = run(&args);
    assert!(stdout(&o).contains("16 classes"));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 0);

    let o = run(&["search", "min-delta", "--n", "7", "--min-width", "3"]);
    assert!(stdout(&o).starts_with("min δ = 14/39"));
}

#[test]
fn repro_and_dot() {
    let o = run(&["repro", "fig1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("[PASS] fig1"));

    let o = run(&["--json", "repro", "fig11"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["targets"][0]["checks"][1]["expected"], "60/171");

    assert_eq!(run(&["repro", "nope"]).status.code(), Some(2));

    let o = run(&["export-dot", "--perm", "41325"]);
    let dot = stdout(&o);
    assert!(dot.contains("1 -> 2;"));
    assert!(dot.contains("4 -> 5;"));
}
