use std::path::PathBuf;
use std::process::{Command, Output};

fn ortholat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ortholat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Writes `text` to a file private to this test.
fn file(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = ortholat(&full);
    assert!(o.status.success(), "{o:?}");
    stdout(&o)
}

#[test]
fn gen_lm_emits_l2() {
    let text = gen(&["lm", "--m", "2"]);
    assert!(text.starts_with("lattice L2\nelem 0 x x' y y' 1\n"));
    assert_eq!(text.matches("\ncover ").count(), 8);
    assert_eq!(text.matches("\northo ").count(), 3);
}

#[test]
fn check_l2() {
    let path = file("l2.lat", &gen(&["lm", "--m", "2"]));
    let o = ortholat(&["check", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"type_tag\": \"I_2\""));
    assert!(out.contains("\"x\": \"1/2\""));
    assert!(out.contains("\"violations\": []"));
}

#[test]
fn check_pentagon() {
    let path = file("pentagon.lat", &gen(&["pentagon"]));
    let o = ortholat(&["check", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let squashed: String = out.split_whitespace().collect();
    assert!(
        squashed.contains(r#"{"law":"modular","witness":["x","z","y"]}"#),
        "{out}"
    );
}

#[test]
fn malformed_input_exits_2() {
    let path = file("bad.lat", "lattice t\nelem 0 1\ncover 0 1\n");
    let o = ortholat(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing `end`"));
    let o = ortholat(&["check", "/nonexistent/file.lat"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ortholat(&["subspace", "--dim", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ortholat(&["gen", "torus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn regular_enumerate_l2() {
    let path = file("l2-regular.lat", &gen(&["lm", "--m", "2"]));
    let o = ortholat(&["regular", path.to_str().unwrap(), "--enumerate", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"regular_relations_found\": 1"));
    assert!(out.contains("\"partitions_scanned\": 203"));
}

#[test]
fn regular_enumerate_refuses_large() {
    let path = file("l6.lat", &gen(&["lm", "--m", "6"]));
    let o = ortholat(&["regular", path.to_str().unwrap(), "--enumerate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_boolean() {
    let path = file("p3.lat", &gen(&["boolean", "--atoms", "3"]));
    let o = ortholat(&["decompose", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("signature: 2^3"));
}

#[test]
fn decompose_hexagon_is_an_input_error() {
    let path = file("hexagon.lat", &gen(&["hexagon"]));
    let o = ortholat(&["decompose", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn subspace_suite_is_deterministic() {
    let args = [
        "subspace", "--dim", "3", "--trials", "30", "--seed", "42", "--suite", "all", "--json",
    ];
    let a = ortholat(&args);
    let b = ortholat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"all_pass\": true"));
}

#[test]
fn unknown_suite_is_rejected() {
    let o = ortholat(&["subspace", "--suite", "everything"]);
    assert_eq!(o.status.code(), Some(2));
}
