mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use pdelp::cli::{cmd_check, cmd_query, cmd_tree, ExitStatus, Options, TreeFormat, TREE_SCHEMA};
use serde_json::Value;

fn engine_file() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/engine.pdelp")
}

/// Writes `text` to a fresh file under the target temp dir.
fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn pdelp(args: &[&str], cap: Option<&str>) -> (String, String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pdelp"));
    cmd.args(args).env_remove("PDELP_NODE_CAP");
    if let Some(c) = cap {
        cmd.env("PDELP_NODE_CAP", c);
    }
    let out = cmd.output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn check_engine_program() {
    let out = cmd_check(&engine_file());
    assert_eq!(out.stdout, "valid: |Π|=5 |Δ|=11\n");
    assert_eq!(out.status, ExitStatus::Success);
}

#[test]
fn check_reports_violations() {
    let out = cmd_check(&scratch("forward.pdelp", "(t <- p, 1)."));
    assert_eq!(out.status, ExitStatus::Invalid);
    assert!(out.stdout.contains("invalid"));
    assert!(out.stdout.contains('p'), "{}", out.stdout);

    let out = cmd_check(&scratch("certain.pdelp", "(q, 1). (~q, 1)."));
    assert_eq!(out.status, ExitStatus::Invalid);

    let out = cmd_check(&scratch("empty.pdelp", ""));
    assert_eq!(out.stdout, "valid: |Π|=0 |Δ|=0\n");
    assert_eq!(out.status, ExitStatus::Success);
}

#[test]
fn parse_and_io_errors() {
    let out = cmd_check(&scratch("broken.pdelp", "(a, 0.5).\n(b <- , 0.5)."));
    assert_eq!(out.status, ExitStatus::ParseError);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains(":2:"), "{}", out.stderr);

    let out = cmd_check(&scratch("zero.pdelp", "(a, 0)."));
    assert_eq!(out.status, ExitStatus::ParseError);

    let out = cmd_check(Path::new("/nonexistent/file.pdelp"));
    assert_eq!(out.status, ExitStatus::ParseError);
    assert!(!out.stderr.is_empty());

    let out = cmd_query(&engine_file(), "Engine", false, Options::default());
    assert_eq!(out.status, ExitStatus::ParseError);
}

#[test]
fn queries() {
    let q = |goal: &str| cmd_query(&engine_file(), goal, false, Options::default());
    let out = q("engine_ok");
    assert_eq!(
        (out.stdout.as_str(), out.status),
        ("NO 0.95\n", ExitStatus::No)
    );
    let out = q("~engine_ok");
    assert_eq!(
        (out.stdout.as_str(), out.status),
        ("YES 0.95\n", ExitStatus::Success)
    );
    let out = q("sw2");
    assert_eq!(
        (out.stdout.as_str(), out.status),
        ("YES 1\n", ExitStatus::Success)
    );
    let out = q("fuel_ok");
    assert_eq!(
        (out.stdout.as_str(), out.status),
        ("YES 0.9\n", ExitStatus::Success)
    );
    let out = q("unknown");
    assert_eq!(
        (out.stdout.as_str(), out.status),
        ("UNDECIDED\n", ExitStatus::Undecided)
    );
}

#[test]
fn query_json_record() {
    let out = cmd_query(&engine_file(), "engine_ok", true, Options::default());
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "NO");
    assert_eq!(v["degree"], "0.95");
    assert_eq!(v["witness"], serde_json::json!([11]));

    let out = cmd_query(&engine_file(), "unknown", true, Options::default());
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "UNDECIDED");
    assert!(v["degree"].is_null() && v["witness"].is_null());
}

#[test]
fn pruning_does_not_change_answers() {
    let program = common::engine();
    let unpruned = Options {
        prune: false,
        ..Options::default()
    };
    for g in common::goals(&program) {
        let g = g.to_string();
        let a = cmd_query(&engine_file(), &g, false, Options::default());
        let b = cmd_query(&engine_file(), &g, false, unpruned);
        assert_eq!(a, b, "{g}");
    }
}

#[test]
fn tree_json_document() {
    let unpruned = Options {
        prune: false,
        ..Options::default()
    };
    let out = cmd_tree(&engine_file(), "engine_ok", TreeFormat::Json, unpruned);
    assert_eq!(out.status, ExitStatus::Success);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], TREE_SCHEMA);
    let trees = v["trees"].as_array().unwrap();
    assert_eq!(trees.len(), 2);
    let root = &trees[0];
    assert_eq!(root["conclusion"], "engine_ok");
    assert_eq!(root["degree"], "0.3");
    assert_eq!(root["support"], serde_json::json!([6, 7, 8, 9, 10]));
    assert_eq!(root["mark"], "D");
    assert!(root["defeat"].is_null());
    let children = root["children"].as_array().unwrap();
    assert_eq!(children.len(), 3);
    assert_eq!(children[0]["defeat"], "proper");

    let single = cmd_tree(
        &engine_file(),
        "~engine_ok",
        TreeFormat::Json,
        Options::default(),
    );
    let v: Value = serde_json::from_str(&single.stdout).unwrap();
    assert_eq!(v["trees"][0]["mark"], "U");
    assert_eq!(v["trees"][0]["children"], serde_json::json!([]));

    let none = cmd_tree(
        &engine_file(),
        "unknown",
        TreeFormat::Json,
        Options::default(),
    );
    assert_eq!(none.status, ExitStatus::Undecided);
    assert!(none.stdout.is_empty() && none.stderr.contains("no argument"));
}

#[test]
fn tree_dot_document() {
    let unpruned = Options {
        prune: false,
        ..Options::default()
    };
    let out = cmd_tree(&engine_file(), "engine_ok", TreeFormat::Dot, unpruned);
    assert_eq!(out.stdout.matches("digraph").count(), 2);
    assert!(out.stdout.contains("engine_ok [0.3] D"));
    assert!(out.stdout.contains("~engine_ok [0.95] U"));
    assert!(out.stdout.contains("\"blocking\""));
}

#[test]
fn node_cap_in_process() {
    let tight = Options {
        prune: false,
        node_cap: 2,
    };
    let out = cmd_tree(&engine_file(), "engine_ok", TreeFormat::Json, tight);
    assert_eq!(out.status, ExitStatus::ResourceCap);
}

#[test]
fn binary_exit_codes() {
    let file = engine_file();
    let file = file.to_str().unwrap();
    assert_eq!(pdelp(&["check", file], None).2, 0);
    assert_eq!(
        pdelp(&["query", file, "engine_ok"], None),
        ("NO 0.95\n".into(), String::new(), 1)
    );
    assert_eq!(
        pdelp(&["query", file, "~engine_ok", "--no-prune"], None).2,
        0
    );
    assert_eq!(pdelp(&["query", file, "nothing"], None).2, 2);
    let invalid = scratch("bin-invalid.pdelp", "(t <- p, 1).");
    assert_eq!(pdelp(&["check", invalid.to_str().unwrap()], None).2, 3);
    let broken = scratch("bin-broken.pdelp", "(t <- p, 1)");
    let (stdout, stderr, code) = pdelp(&["check", broken.to_str().unwrap()], None);
    assert_eq!(code, 4);
    assert!(stdout.is_empty() && !stderr.is_empty());
}

#[test]
fn binary_node_cap_env() {
    let file = engine_file();
    let file = file.to_str().unwrap();
    assert_eq!(
        pdelp(&["tree", file, "engine_ok", "--no-prune"], Some("3")).2,
        5
    );
    assert_eq!(
        pdelp(&["tree", file, "engine_ok", "--no-prune"], Some("100")).2,
        0
    );
    assert_ne!(pdelp(&["tree", file, "engine_ok"], Some("zero")).2, 0);
}

#[test]
fn binary_json_is_stable() {
    let file = engine_file();
    let file = file.to_str().unwrap();
    for args in [
        &["tree", file, "engine_ok", "--format", "json", "--no-prune"][..],
        &["tree", file, "engine_ok", "--format", "dot"][..],
        &["query", file, "fuel_ok", "--json"][..],
    ] {
        let first = pdelp(args, None);
        assert_eq!(first.2 == 0, first.1.is_empty());
        assert_eq!(pdelp(args, None), first);
    }
}
