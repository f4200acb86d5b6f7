use std::io::Write;
use std::process::{Command, Output};

fn gammans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gammans(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gamma_examples() {
    assert_eq!(stdout(&["gamma", "--n", "2", "--s", "8", "--i", "9"]), "(2,1^6) + (2^3,1^2)  dim=35\n");
    assert_eq!(stdout(&["gamma", "--n", "1", "--s", "5", "--i", "3"]), "0  dim=0\n");
    assert_eq!(
        stdout(&["gamma", "--n", "2", "--s", "5", "--i", "4", "--format", "tsv"]),
        "s\ti\tmodule\tdim\n5\t4\t(2^2,1) + (3,2)\t10\n"
    );
}

#[test]
fn modular_example() {
    assert_eq!(stdout(&["modular", "--k", "12"]), "M=2 S=1\n");
    assert_eq!(stdout(&["modular", "--k", "2"]), "M=0 S=0\n");
}

#[test]
fn small_verbs() {
    assert_eq!(stdout(&["pieri", "--lambda", "(2,2)", "--k", "3"]), "(3,2^2) + (4,2,1) + (5,2)\n");
    assert_eq!(stdout(&["lr", "--lambda", "(2,1)", "--mu", "(2,1)", "--nu", "(3,2,1)"]), "2\n");
    assert_eq!(stdout(&["lr", "--lambda", "(1)", "--mu", "(1)"]), "(1^2) + (2)\n");
    assert_eq!(stdout(&["dim", "--lambda", "(3,2)"]), "5\n");
    assert_eq!(stdout(&["detect-2mn", "--n", "3", "--m", "1", "--s", "9"]), "1\n");
    assert_eq!(stdout(&["schur-dim", "--lambda", "(3,1)", "--n", "2"]), "3\n");
    assert_eq!(stdout(&["sp-detect", "--n", "2", "--m", "1", "--d", "1"]), "degree=5 weight=(3^2,1)\n");
    assert_eq!(stdout(&["cusp-pairs", "--limit", "20"]), "first nonzero m=6\n");
    assert!(stdout(&["cusp-pairs", "--m", "6"]).ends_with("total=1\n"));
    assert!(stdout(&["hairy", "--n", "1", "--s", "3", "--k", "1", "--dim-v", "2"]).ends_with("(3)  dim=4\n"));
    assert!(stdout(&["wmod", "--q", "8"]).starts_with("W_8 = (2,1^6) + (2^3,1^2)\n"));
}

#[test]
fn tables_are_stable_and_tsv_round_trips() {
    for which in ["1", "2", "3", "4"] {
        let a = stdout(&["tables", "--which", which]);
        assert_eq!(a, stdout(&["tables", "--which", which]));
    }
    let dims = stdout(&["tables", "--which", "4"]);
    assert!(dims.lines().any(|l| l.split_whitespace().collect::<Vec<_>>()
        == ["Gamma(2,10)", "1", "0", "0", "0", "420", "630", "0", "1050", "630", "1575", "0"]));
    let tsv = stdout(&["tables", "--which", "3", "--format", "tsv"]);
    let mut rows = tsv.lines();
    assert_eq!(rows.next(), Some("s\ti\tmodule\tdim"));
    for row in rows {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols.len(), 4);
        let single = stdout(&["gamma", "--n", "2", "--s", cols[0], "--i", cols[1]]);
        assert_eq!(single, format!("{}  dim={}\n", cols[2], cols[3]));
        let m = gammans::Module::parse(cols[2], cols[0].parse().unwrap()).unwrap();
        assert_eq!(m.to_string(), cols[2]);
    }
}

#[test]
fn assembly_check_reports_signature_and_trace() {
    let mut file = tempfile();
    writeln!(
        file.1,
        "# two top classes of different degree\nvertex a rank=1 leaves=3 degree=2\nvertex b rank=1 leaves=5 degree=4\nglue a.1 b.1"
    )
    .unwrap();
    let out = stdout(&["assembly", "check", file.0.to_str().unwrap()]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("signature: Gamma(2,6) degree=6 vcd=7"));
    assert_eq!(lines.next(), Some("verdict: forced-zero"));
    assert!(lines.next().unwrap().contains("[degree-bound] fired"));
    std::fs::remove_file(&file.0).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(gammans(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gammans(&["gamma", "--n", "2"]).status.code(), Some(2));
    assert_eq!(gammans(&["tables", "--which", "5"]).status.code(), Some(2));
    assert_eq!(gammans(&["gamma", "--n", "3", "--s", "2", "--i", "0"]).status.code(), Some(1));
    assert_eq!(gammans(&["dim", "--lambda", "(1,2)"]).status.code(), Some(1));
    assert_eq!(gammans(&["wmod", "--q", "3"]).status.code(), Some(1));
    let missing = gammans(&["assembly", "check", "/nonexistent/pattern.txt"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/nonexistent/pattern.txt"));
}

#[test]
fn selfcheck_passes() {
    let out = stdout(&["selfcheck"]);
    assert!(out.trim_end().ends_with("failed 0"), "{out}");
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("gammans-cli-test-{}.txt", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}
