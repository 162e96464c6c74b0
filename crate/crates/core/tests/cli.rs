use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kfgr").chain(args.iter().copied());
    let code = kfgr::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

struct Files {
    _dir: TempDir,
    s3_point: String,
    s3_natural: String,
    z2_swap: String,
    broken: String,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let s3_point = write(dir.path(), "s3-point.json", r#"{"group": "S3", "action": "point"}"#);
    let s3_natural = write(
        dir.path(),
        "s3-natural.json",
        r#"{"group": {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}, "action": [[1, 0, 2], [1, 2, 0]]}"#,
    );
    let z2_swap = write(dir.path(), "z2-swap.json", r#"{"group": "Z2", "action": [[1, 0]]}"#);
    let broken = write(dir.path(), "broken.json", r#"{"group": "S3", "action": [[0, 0, 1]]}"#);
    Files {
        _dir: dir,
        s3_point,
        s3_natural,
        z2_swap,
        broken,
    }
}

#[test]
fn chi_of_a_point_counts_commuting_tuples() {
    let f = files();
    let (code, out, _) = run(&["chi", "--order", "1", &f.s3_point]);
    assert_eq!((code, out.trim()), (0, "3"));
    let (code, out, _) = run(&["chi", "-k", "2", &f.s3_point]);
    assert_eq!((code, out.trim()), (0, "8"));
    let (code, out, _) = run(&["--json", "chi", "-k", "0", &f.s3_natural]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["chi"], 1);
}

#[test]
fn gset_class_and_chi_un() {
    let f = files();
    let (code, out, _) = run(&["gset", "class", &f.s3_natural]);
    assert_eq!((code, out.trim()), (0, "T[C2]"));
    let (code, out, _) = run(&["chi-un", &f.z2_swap]);
    assert_eq!((code, out.trim()), (0, "T[e]"));
}

#[test]
fn zeta_of_a_free_orbit_has_unit_euler_coefficients() {
    let f = files();
    let (code, out, _) = run(&["zeta", "--trunc", "3", &f.z2_swap]);
    assert_eq!(code, 0);
    let euler = out.lines().find(|l| l.starts_with("euler0:")).unwrap();
    assert_eq!(euler, "euler0: 1, 1, 1, 1");
    let (code, out, _) = run(&["--json", "config-lambda", "--trunc", "2", &f.z2_swap]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["euler0"], serde_json::json!([1, 1, 0]));
}

#[test]
fn alpha_of_a_generator() {
    let (code, out, _) = run(&["alpha", "S3"]);
    assert_eq!(code, 0);
    let mut terms: Vec<&str> = out.trim().split(" + ").collect();
    terms.sort_unstable();
    assert_eq!(terms, vec!["T[C2]", "T[C3]", "T[S3]"]);
    let (code, out, _) = run(&["alpha", "--r", "2", "e"]);
    assert_eq!((code, out.trim()), (0, "T[C2]"));
}

#[test]
fn group_show_reports_structure() {
    let (code, out, _) = run(&["--json", "group", "show", "Z2xS3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 12);
    assert_eq!(v["name"], "C2xS3");
    assert_eq!(v["class_sizes"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "axioms"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run(&["verify", "macdonald", "--sign", "1", "--trunc", "2"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["verify", "homomorphism", "--cases", "5"]);
    assert_eq!(code, 1);
    let (code, _, err) = run(&["verify", "no-such-suite"]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-suite"));
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    let f = files();
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["chi", &f.s3_point]).0, 2);
    assert_eq!(run(&["chi", "-k", "1", "/nonexistent/x.json"]).0, 2);
    let (code, _, err) = run(&["gset", "class", &f.broken]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    assert_eq!(run(&["verify", "axioms", "--sign", "0"]).0, 2);
    assert_eq!(run(&["group", "show", "Q17"]).0, 2);
}

#[test]
fn capacity_limits_exit_with_three() {
    let f = files();
    // S3 wr S_5 has order 6^5 * 120, far above the table cap
    let (code, _, err) = run(&["zeta", "--trunc", "5", &f.s3_point]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn registry_snapshot_keeps_ids_stable() {
    let dir = TempDir::new().unwrap();
    let reg = dir.path().join("registry.json");
    let reg = reg.to_str().unwrap();
    let (code, out, _) = run(&["--json", "--registry", reg, "group", "show", "S4"]);
    assert_eq!(code, 0);
    let first: Value = serde_json::from_str(&out).unwrap();
    let (_, out, _) = run(&["--json", "--registry", reg, "group", "show", "Z5"]);
    let second: Value = serde_json::from_str(&out).unwrap();
    let (_, out, _) = run(&["--json", "--registry", reg, "group", "show", "S4"]);
    let again: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(first["class"], again["class"]);
    assert_ne!(first["class"], second["class"]);
}
