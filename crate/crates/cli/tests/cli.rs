use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_derangekit"))
        .env("DERANGEKIT_DATA", dir)
        .args(args)
        .output()
        .unwrap()
}

fn run(args: &[&str]) -> Output {
    run_in(&data(), args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn copy_entry(to: &Path, name: &str) {
    let dst = to.join(name);
    fs::create_dir_all(&dst).unwrap();
    for f in fs::read_dir(data().join(name)).unwrap() {
        let f = f.unwrap();
        fs::copy(f.path(), dst.join(f.file_name())).unwrap();
    }
}

#[test]
fn analyze_reports_kappa() {
    let o = run(&["analyze", "--group", "catalog:A5", "--sub", "catalog:A5/D10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["kappa", "1"]));

    let o = run(&["--format", "json", "analyze", "--group", "catalog:M11", "--sub", "catalog:M11/S5"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kappa"], 4);
    assert_eq!(v["degree"], 66);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["analyze", "--group", "catalog:Nope"])), 2);
    assert_eq!(code(&run(&["analyze", "--group", "catalog:A5", "--sub", "catalog:A5/Q8"])), 2);
    assert_eq!(code(&run(&["analyze", "--group", "bogus:A5"])), 2);
    assert_eq!(code(&run(&["table", "no_such_table"])), 2);

    let big = ["analyze", "--group", "catalog:Hering_Sp4_3.2", "--sub", "catalog:Hering_Sp4_3.2/H"];
    let o = run(&big);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--tier extended"));
    let mut ext = vec!["--tier", "extended"];
    ext.extend(big);
    assert_eq!(code(&run(&ext)), 0);

    assert_eq!(code(&run(&["table", "kappa_table1"])), 0);
}

#[test]
fn output_does_not_depend_on_workers() {
    for args in [&["table", "an_table4", "m11_row"][..], &["verify", "theorem5"], &["--format", "csv", "table", "phi_small"]] {
        let one = run(&[&["--workers", "1"], args].concat());
        let four = run(&[&["--workers", "4"], args].concat());
        assert_eq!(code(&one), 0, "{}", stdout(&one));
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn file_references() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("s4.gens");
    fs::write(&g, "perm 4\n(1,2)\n(1,2,3,4)\n").unwrap();
    let r = format!("file:{}", g.display());
    let o = run(&["--format", "json", "analyze", "--group", &r]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["group_order"].as_u64(), v["kappa"].as_u64()), (Some(24), Some(2)));

    let missing = format!("file:{}", dir.path().join("none.gens").display());
    assert_eq!(code(&run(&["analyze", "--group", &missing])), 2);
}

#[test]
fn characters() {
    let o = run(&["chars", "vanish", "--group", "catalog:A5", "--sub", "catalog:A5/D10", "--sub", "catalog:A5/A4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("0 hits"));
    let o = run(&["--format", "json", "chars", "table", "--group", "catalog:A5"]);
    assert_eq!(code(&o), 0);
    assert!(serde_json::from_slice::<serde_json::Value>(&o.stdout).is_ok());
    assert_eq!(code(&run(&["chars", "induce", "--group", "catalog:A5", "--sub", "catalog:A5/D10"])), 0);
}

#[test]
fn tampered_catalogs_fail_validation() {
    let dir = tempfile::tempdir().unwrap();
    copy_entry(dir.path(), "A5");
    assert_eq!(code(&run_in(dir.path(), &["catalog", "validate"])), 0);
    let meta = dir.path().join("A5/meta.txt");
    let text = fs::read_to_string(&meta).unwrap();
    fs::write(&meta, text.replace("expected_kappa.D10 = 1", "expected_kappa.D10 = 2")).unwrap();
    let o = run_in(dir.path(), &["catalog", "validate"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("expected_kappa.D10") || String::from_utf8_lossy(&o.stderr).contains("expected_kappa.D10"));

    // Golden tables are embedded, so regenerating against bad data is a mismatch.
    fs::write(&meta, text.replace("expected_kappa.D10 = 1", "expected_kappa.D10 = 2")).unwrap();
    fs::write(dir.path().join("A5/sub_D10.gens"), "perm 5\n(1,2,3)\n").unwrap();
    copy_entry(dir.path(), "S5");
    copy_entry(dir.path(), "A6");
    copy_entry(dir.path(), "S6");
    assert_eq!(code(&run_in(dir.path(), &["table", "an_table4"])), 1);
}

#[test]
fn catalog_generate_and_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = run(&["catalog", "generate", "A5", "D10", "--out", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["meta.txt", "group.gens"] {
        assert_eq!(fs::read(dir.path().join("A5").join(f)).unwrap(), fs::read(data().join("A5").join(f)).unwrap());
    }
    assert_eq!(code(&run_in(dir.path(), &["catalog", "validate"])), 0);
    let o = run(&["catalog", "list"]);
    assert!(stdout(&o).lines().count() >= 46);
}
