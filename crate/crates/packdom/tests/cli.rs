//! End-to-end checks of the packdom binary: exit codes, JSON surfaces, and
//! byte-identical output for identical invocations.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_packdom")
}

fn write(dir: &std::path::Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("packdom-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn graph_commands_and_exit_codes() {
    let dir = tmpdir("graph");
    let g = write(&dir, "p7.txt", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let gs = g.to_str().unwrap();

    let out = run(&["classify", gs]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["connected"], true);
    assert_eq!(doc["cactus"], true);

    let out = run(&["mp", "exact", gs]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["size"], 3);

    // A valid witness verifies with exit 0; dropping domination exits 2.
    let w = write(&dir, "w.json", "{\"M\":[0,3,6]}");
    let out = run(&["mp", "verify", gs, w.to_str().unwrap()]);
    assert!(out.status.success());
    let f0 = write(&dir, "f0.json", "{\"f\":{}}");
    let out = run(&["gammab", "verify", gs, f0.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed input exits 1 and names the offending line.
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n1 1\n");
    let out = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    // A tiny budget turns the oracle inconclusive: exit 3.
    let out = run(&["mp", "exact", gs, "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tmpdir("det");
    let g = write(
        &dir,
        "c9.txt",
        "9 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 0\n",
    );
    let gs = g.to_str().unwrap();
    for args in [
        vec!["bounds", gs],
        vec!["gammab", "exact", gs],
        vec!["cactus", gs],
        vec!["family", "pentagon", "--k", "2"],
        vec!["hyperbolicity", gs],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(
            a.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "output of {args:?} not deterministic");
    }
}

#[test]
fn geometry_and_gadget_surfaces() {
    let dir = tmpdir("geo");
    let pts = write(&dir, "pts.txt", "0\n1\n3\n7\n");
    let ps = pts.to_str().unwrap();
    let out = run(&["geo", "mdb", ps]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["cost"], 2);

    let out = run(&["geo", "line-rmp", ps, "--r", "2"]);
    assert!(out.status.success());

    // Points with tied distances are rejected as malformed input.
    let tied = write(&dir, "tied.txt", "0\n2\n4\n");
    let out = run(&["geo", "nng", tied.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let hs = write(&dir, "hs.txt", "3 2\n0 1\n1 2\n");
    let hss = hs.to_str().unwrap();
    let out = run(&["gadget", "hs2mp", hss, "--variant", "chordal", "--k", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["target"], 2);

    let wit = write(&dir, "hw.json", "{\"M\":[1,2]}");
    let out = run(&[
        "gadget",
        "map",
        hss,
        wit.to_str().unwrap(),
        "--dir",
        "fwd",
        "--kind",
        "hs2mp",
        "--variant",
        "chordal",
        "--k",
        "2",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["M"].as_array().unwrap().len(), 2);
}
