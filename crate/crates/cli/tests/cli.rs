use std::path::PathBuf;
use std::process::{Command, Output};

fn belyi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_belyi")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(p).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let o = belyi(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), golden(name), "{args:?} differs from {name}");
}

#[test]
fn golden_reports() {
    check_golden(&["facevector", "2"], "facevector_2.txt");
    check_golden(&["passport", "1"], "passport_1.txt");
    check_golden(&["verify", "d60"], "verify_d60.txt");
    check_golden(&["--format", "json", "verify", "d6"], "verify_d6.json");
    check_golden(&["derive", "1"], "derive_1.txt");
    check_golden(&["derive", "5"], "derive_5.txt");
    check_golden(&["--format", "json", "derive", "6"], "derive_6.json");
    check_golden(&["compose", "schwarz"], "compose_schwarz.txt");
    check_golden(&["--format", "json", "compose", "d12"], "compose_d12.json");
}

#[test]
fn derive_c22_case() {
    let o = belyi(&["derive", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("NoSolutionLeadingCoeff"));
    assert!(s.contains("840"));
    assert!(s.contains("C22"));
}

#[test]
fn presets_verify() {
    for (p, pp) in [
        ("d6", "(3^2 | 2^2 1^2 | 5^1 1^1)"),
        ("d12", "(3^4 | 2^6 | 5^2 1^2)"),
        ("d60", "(3^20 | 2^30 | 5^12)"),
        ("d72", "(3^24 | 2^36 | 6^2 5^12)"),
    ] {
        let o = belyi(&["--format", "json", "verify", p]);
        assert!(o.status.success(), "{p}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["passport"], pp);
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn export_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d72.json");
    let p = path.to_str().unwrap();
    assert!(belyi(&["export", "d72", p]).status.success());
    let from_file = belyi(&["--format", "json", "verify", p]);
    assert!(from_file.status.success());
    let preset = belyi(&["--format", "json", "verify", "d72"]);
    let a: serde_json::Value = serde_json::from_slice(&from_file.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&preset.stdout).unwrap();
    assert_eq!(a["passport"], b["passport"]);
    assert_eq!(a["degree"], 72);
}

#[test]
fn tampered_file_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d6.json");
    let p = path.to_str().unwrap();
    assert!(belyi(&["export", "d6", p]).status.success());
    let src = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, src.replacen("\"125\"", "\"126\"", 1)).unwrap();
    let o = belyi(&["verify", p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("verification failed"));
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(belyi(&["verify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(belyi(&["verify", "d7"]).status.code(), Some(2));
    assert_eq!(belyi(&["export", "d5", "x.json"]).status.code(), Some(2));
    assert_eq!(belyi(&["compose", "d6"]).status.code(), Some(2));
    assert_eq!(belyi(&["--tol", "0", "geometry", "barrel"]).status.code(), Some(2));
    assert_eq!(belyi(&["derive", "seven"]).status.code(), Some(2));
    assert_eq!(belyi(&[]).status.code(), Some(2));
}

#[test]
fn derive_out_of_range_fails() {
    let o = belyi(&["--max-s", "6", "derive", "8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn geometry_report_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("face.svg");
    let o = belyi(&["--format", "json", "geometry", "barrel", "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lengths: Vec<f64> = v["face"]["edges"].as_array().unwrap().iter().map(|e| e["length"].as_f64().unwrap()).collect();
    for (l, want) in lengths.iter().zip([0.632, 0.599, 0.599, 0.632, 0.696]) {
        assert!((l - want).abs() < 5e-3);
    }
    assert!((v["face"]["dihedral_degrees"].as_f64().unwrap() - 1.36).abs() < 0.05);
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg"));
    assert!(picture.contains("A13") && picture.contains("0.696") && picture.contains("closure gap"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = belyi(&["--output", out.to_str().unwrap(), "passport", "1"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out).unwrap(), golden("passport_1.txt"));
}

#[test]
fn unwritable_svg_path() {
    let o = belyi(&["geometry", "barrel", "--svg", "/nonexistent-dir/face.svg"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot write"));
}

#[test]
fn byte_identical_across_runs() {
    for args in [&["--format", "json", "geometry", "barrel"][..], &["derive", "d6"], &["--format", "json", "compose", "d72"]] {
        assert_eq!(belyi(args).stdout, belyi(args).stdout, "{args:?}");
    }
}
