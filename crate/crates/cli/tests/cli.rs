use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interchange")).args(args).env("INTERCHANGE_CACHE_DIR", cache).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degree_five_types_as_listed() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["types", "--degree", "5"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    let listed: Vec<(&str, &str)> = text.lines().map(|l| l.split_once('\t').unwrap()).collect();
    assert_eq!(listed.len(), 90);
    let listed_types = [
        (8, "a∘(b•c)∘(d•e)"),
        (18, "a∘((b∘c)•(d∘e))"),
        (25, "(a•b)∘(c•d)∘e"),
        (26, "(a•b)∘(c•(d∘e))"),
        (27, "(a•b)∘(c•d•e)"),
        (28, "(a•b)∘((c∘d)•e)"),
        (30, "(a•(b∘c))∘(d•e)"),
        (32, "(a•b•c)∘(d•e)"),
        (34, "((a∘b)•c)∘(d•e)"),
        (41, "((a∘b)•(c∘d))∘e"),
        (53, "a•((b•c)∘(d•e))"),
        (63, "a•(b∘c)•(d∘e)"),
        (68, "(a∘b)•(c∘d∘e)"),
        (69, "(a∘b)•(c∘(d•e))"),
        (70, "(a∘b)•((c•d)∘e)"),
        (73, "(a∘b)•(c∘d)•e"),
        (74, "(a∘b∘c)•(d∘e)"),
        (76, "(a∘(b•c))•(d∘e)"),
        (78, "((a•b)∘c)•(d∘e)"),
        (87, "((a•b)∘(c•d))•e"),
    ];
    for (i, s) in listed_types {
        assert_eq!(listed[i - 1], (i.to_string().as_str(), s));
    }
    let one = run(&["types", "--degree", "5", "--vertex", "26", "--format", "json"], dir.path());
    assert_eq!(stdout(&one).trim(), r#"{"index":26,"type":"(a•b)∘(c•(d∘e))"}"#);
}

#[test]
fn analyze_degree_eight_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["analyze", "--degree", "8"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 nontrivial components\n");
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["fig8", "fig9", "fig10"] {
        let path = fixture(&format!("{name}.proof.json"));
        assert_eq!(run(&["verify", path.to_str().unwrap()], dir.path()).status.code(), Some(0), "{name}");
        let path = fixture(&format!("{name}.transcript.txt"));
        assert_eq!(run(&["verify", path.to_str().unwrap()], dir.path()).status.code(), Some(0), "{name}");
    }
    // a proof whose claimed end differs from where the steps lead
    let json = fs::read_to_string(fixture("fig9.proof.json")).unwrap();
    let tampered = json.replacen("\"end\": \"(a•b)∘(c•e•d•f)∘(g•h•i)\"", "\"end\": \"(a•b)∘(c•d•e•f)∘(g•h•i)\"", 1);
    assert_ne!(tampered, json);
    let bad = dir.path().join("bad.json");
    fs::write(&bad, tampered).unwrap();
    let out = run(&["verify", bad.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("invalid: end"));

    assert_eq!(run(&["verify", "/nonexistent/proof.json"], dir.path()).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["graph", "--degree", "1"],
        &["graph", "--degree", "11"],
        &["types", "--degree", "4", "--format", "dot"],
        &["schroeder", "--workers", "0"],
        &["identity", "--degree", "6", "--component", "1"],
    ] {
        assert_eq!(run(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn corrupted_cache_is_rebuilt_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(&["components", "--degree", "6", "--format", "json"], dir.path());
    assert!(first.status.success());
    let file = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut bytes = fs::read(&file).unwrap();
    let n = bytes.len();
    bytes[n - 5] ^= 1;
    fs::write(&file, bytes).unwrap();
    let second = run(&["components", "--degree", "6", "--format", "json"], dir.path());
    assert!(second.status.success());
    assert!(String::from_utf8_lossy(&second.stderr).contains("warning"));
    assert_eq!(first.stdout, second.stdout);
    let third = run(&["components", "--degree", "6", "--format", "json"], dir.path());
    assert!(third.stderr.is_empty());
}

#[test]
fn relations_with_sidecar_and_inductive_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rel6.jsonl");
    let o = run(
        &["relations", "--degree", "6", "--format", "json", "--check-inductive", "--out", out.to_str().unwrap()],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 98);
    let side = fs::read_to_string(dir.path().join("rel6.jsonl.types.json")).unwrap();
    assert_eq!(side.lines().count(), 394);
    assert!(String::from_utf8_lossy(&o.stderr).contains("equal to the redex enumeration"));
}

#[test]
fn identity_and_identity_file() {
    let dir = tempfile::tempdir().unwrap();
    let id_path = dir.path().join("id.json");
    let proof_path = dir.path().join("proof.json");
    let o = run(
        &[
            "identity",
            "--degree",
            "9",
            "--vertex",
            "9137",
            "--format",
            "json",
            "--out",
            proof_path.to_str().unwrap(),
            "--identity-out",
            id_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let id: serde_json::Value = serde_json::from_str(&fs::read_to_string(&id_path).unwrap()).unwrap();
    assert_eq!(id["type"], "(a•b)∘(c•d•e•f)∘(g•h•i)");
    assert_eq!(id["pi"], serde_json::json!([1, 2, 3, 5, 4, 6, 7, 8, 9]));
    assert_eq!(run(&["verify", proof_path.to_str().unwrap()], dir.path()).status.code(), Some(0));
}

#[test]
fn kock_reports_a_renaming() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["kock", "--builtin", "--format", "json"], dir.path());
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["success"], true);
    assert_eq!(v["renaming"]["rho"].as_array().unwrap().len(), 16);
}

#[test]
fn schroeder_and_monomial_counts() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["schroeder", "--degree", "10", "--format", "csv"], dir.path());
    assert!(stdout(&o).ends_with("9,41586\n10,206098\n"));
    let o = run(&["count-monomials", "--degree", "7"], dir.path());
    assert_eq!(stdout(&o), "1158\n");
}

#[test]
fn dot_and_csv_are_worker_independent() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for args in [["graph", "--degree", "7", "--format", "dot"], ["analyze", "--degree", "7", "--format", "csv"]] {
        let one = run(&[&args[..], &["--workers", "1"]].concat(), a.path());
        let eight = run(&[&args[..], &["--workers", "8"]].concat(), b.path());
        assert!(one.status.success());
        assert_eq!(one.stdout, eight.stdout, "{args:?}");
    }
}
