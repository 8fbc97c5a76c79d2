use assert_cmd::Command;
use serde_json::Value;

fn abelrep() -> Command {
    Command::cargo_bin("abelrep").unwrap()
}

fn json_of(out: &[u8]) -> Value {
    serde_json::from_slice(out).expect("stdout is JSON")
}

#[test]
fn classify_cyclic_four() {
    let out = abelrep().args(["classify", "gens: (1 2 3 4); degree: 4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out.stdout);
    assert_eq!(v["verdict_GR"], false);
    assert_eq!(v["verdict_DGR"], true);
}

#[test]
fn classify_with_witness_and_oracle() {
    let out = abelrep()
        .args(["classify", "--witness", "--check-oracle", "gens: (1 2)(3 4), (5 6)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out.stdout);
    assert_eq!(v["oracle"]["agrees"], true);
    assert!(v["witness_graph"].is_object());
    assert!(v["witness_digraph"].is_object());
}

#[test]
fn directed_synth_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta.json");
    let out = abelrep().args(["synth", "--directed", "regular: [3, 3]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stderr).trim(), "Aut order 9, equal: true");
    let g = json_of(&out.stdout);
    assert_eq!(g["colour_count"], 3);
    std::fs::write(&path, &out.stdout).unwrap();

    let out = abelrep()
        .args(["verify", path.to_str().unwrap(), "regular: [3, 3]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out.stdout)["equal"], true);
}

#[test]
fn verify_catalogue_graph() {
    let out = abelrep()
        .args(["verify", "catalogue:fig1", "regular: [2, 2, 2, 2]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out.stdout)["equal"], true);

    let out = abelrep().args(["verify", "catalogue:z2_2", "cyclic(4)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out.stdout)["equal"], false);
}

#[test]
fn synth_reads_group_from_stdin_and_writes_dot() {
    let out = abelrep()
        .args(["synth", "--out", "dot", "-"])
        .write_stdin("regular: [2, 2, 2]")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph G {"));
}

#[test]
fn min_colours_for_z2_cubed() {
    let out = abelrep().args(["synth", "--min-colours", "regular: [2, 2, 2]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out.stdout)["colour_count"], 4);
}

#[test]
fn negative_verdict_exits_one() {
    let out = abelrep().args(["synth", "cyclic(5)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: negative:"));
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn input_errors_exit_two() {
    let out = abelrep().args(["classify", "gens: (1 2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: input:"));
    let out = abelrep().args(["aut", "/nonexistent/graph.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = abelrep().args(["catalogue", "k5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn limits_exit_three() {
    let out = abelrep()
        .args(["--limit-elements", "10", "closure", "--kind", "2", "cyclic(12)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = abelrep()
        .args(["aut", "--limit-vertices", "10", "catalogue:fig3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn closures() {
    let run = |kind: &str| {
        let out = abelrep().args(["closure", "--kind", kind, "cyclic(5)"]).output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        json_of(&out.stdout)
    };
    assert_eq!(run("2")["closed"], true);
    let star = run("2star");
    assert_eq!(star["closed"], false);
    assert_eq!(star["closure_order"], 10);
    assert_eq!(run("2orbit")["closure_order"], 5);
}

#[test]
fn analyze_reports_adjacency() {
    let out = abelrep().args(["analyze", "par(cyclic(3), 2)"]).output().unwrap();
    let v = json_of(&out.stdout);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    assert_eq!(v["pairs"][0]["adjacent"], true);
}

#[test]
fn catalogue_lists_verified_entries() {
    let out = abelrep().arg("catalogue").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out.stdout);
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 11);
    assert!(entries.iter().all(|e| e["verified"] == true));

    let out = abelrep().args(["catalogue", "fig2_right"]).output().unwrap();
    let v = json_of(&out.stdout);
    assert_eq!(v["name"], "delta");
    assert_eq!(v["graph"]["directed"], true);
}

#[test]
fn aut_of_kernel_z3_pair() {
    let out = abelrep().args(["aut", "catalogue:fig3"]).output().unwrap();
    assert_eq!(json_of(&out.stdout)["order"], "27");
}

#[test]
fn output_is_deterministic() {
    let run = || abelrep().args(["synth", "par(cyclic(3), 2)"]).output().unwrap().stdout;
    assert_eq!(run(), run());
}
