//! End-to-end checks of the command-line surface: outputs, file formats and
//! exit codes (0 success, 1 verification failure, 2 usage error).

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_freehedra"))
}

#[test]
fn fvector_matches_figures() {
    let out = bin().args(["fvector", "K", "4"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5 5 1");

    let out = bin().args(["fvector", "Freehedron", "2"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5 5 1");
}

#[test]
fn faces_are_sorted() {
    let out = bin().args(["faces", "Cube", "1"]).output().unwrap();
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines, vec!["a", "b", "c"]);

    let out = bin().args(["faces", "Freehedron", "2", "--dim", "0"]).output().unwrap();
    assert_eq!(std::str::from_utf8(&out.stdout).unwrap().lines().count(), 5);
}

#[test]
fn usage_errors_exit_2() {
    // Out-of-range parameter.
    let out = bin().args(["fvector", "K", "9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Unknown family.
    let out = bin().args(["fvector", "Simplex", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Unknown suite.
    let out = bin().args(["verify", "everything"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    // Unknown export format (rejected by argument parsing).
    let out = bin()
        .args(["export", "Cube", "2", "--format", "xml", "--out", "/tmp/x"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_exits_0() {
    let out = bin().args(["verify", "d2", "--max-n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[PASS]"));
    assert!(text.contains("0 failures"));
}

#[test]
fn export_json_roundtrips() {
    let dir = std::env::temp_dir();
    let path = dir.join("freehedra_cli_test_pentagon.json");
    let out = bin()
        .args(["export", "Freehedron", "2", "--format", "json", "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: freehedra::export::ExportDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.faces.len(), 11);
    assert!(freehedra::export::reimport_matches(&doc).unwrap());
    std::fs::remove_file(&path).ok();
}

#[test]
fn export_dot_counts() {
    let dir = std::env::temp_dir();
    let path = dir.join("freehedra_cli_test_square.dot");
    let out = bin()
        .args(["export", "Cube", "2", "--format", "dot", "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches(" -- ").count(), 12);
    // 9 face nodes: quoted names ending in ";" inside the clusters.
    let nodes = text
        .lines()
        .filter(|l| l.trim_start().starts_with('"') && l.ends_with(';') && !l.contains(" -- "))
        .count();
    assert_eq!(nodes, 9);
    std::fs::remove_file(&path).ok();
}

#[test]
fn diagonal_of_a_face() {
    let out = bin().args(["diagonal", "Cube", "2", "bb"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 4);
}
