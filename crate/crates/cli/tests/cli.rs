use std::path::Path;
use std::process::{Command, Output};

use qwsed_core::families::FamilySpec;
use qwsed_core::sedentary::{Classifier, ClassifyOptions};
use qwsed_core::spectral::eigendecompose;
use tempfile::TempDir;

fn qwsed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwsed")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &TempDir, family: &str, params: &[&str]) -> std::path::PathBuf {
    let out = dir.path().join(format!("{family}.json"));
    let mut args = vec!["build", family];
    for p in params {
        args.extend(["--param", p]);
    }
    args.extend(["--out", path_str(&out)]);
    let o = qwsed(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn classify_p4_reports_unique_matching() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "path", &["n=4"]);
    let o = qwsed(&["classify", path_str(&g)]);
    assert!(o.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert_eq!(r["status"], "not_sedentary");
        assert_eq!(r["certificate"], "unique_perfect_matching");
    }
}

#[test]
fn scan_k5_csv() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "complete", &["n=5"]);
    let csv = dir.path().join("k5.csv");
    let o = qwsed(&["scan", path_str(&g), "--vertex", "0", "--horizon", &std::f64::consts::TAU.to_string(), "--csv", path_str(&csv)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,re,im,abs"));
    let rows: Vec<[f64; 4]> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect();
    assert!(rows.windows(2).all(|w| w[0][0] < w[1][0]));
    for r in &rows {
        assert!((r[3] - r[1].hypot(r[2])).abs() <= 1e-12);
    }
    let min = rows.iter().map(|r| r[3]).fold(f64::INFINITY, f64::min);
    let first = rows.iter().find(|r| r[3] <= min + 1e-12).unwrap();
    assert!((min - 0.6).abs() <= 1e-9);
    assert!((first[0] - std::f64::consts::PI / 5.0).abs() <= 1e-3);
}

#[test]
fn build_file_classify_matches_in_memory() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "cocktail_party", &["m=3"]);
    let out = dir.path().join("r.json");
    let o = qwsed(&["classify", path_str(&g), "--out", path_str(&out)]);
    assert!(o.status.success());
    let from_cli = std::fs::read_to_string(&out).unwrap();

    let mem = FamilySpec::parse("cocktail_party", &[("m".into(), "3".into())]).unwrap().build().unwrap();
    let s = eigendecompose(&mem).unwrap();
    let verdicts = Classifier::new(&mem, &s, ClassifyOptions::default()).unwrap().classify_all().unwrap();
    let reports: Vec<_> = verdicts.iter().map(|v| v.report()).collect();
    assert_eq!(from_cli, serde_json::to_string_pretty(&reports).unwrap() + "\n");
}

#[test]
fn spectrum_lists_forms() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "subdivided_star", &["m=3"]);
    let o = qwsed(&["spectrum", path_str(&g)]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let forms: Vec<(String, u64)> = doc["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["form"].as_str().unwrap().to_string(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    let want = [("2", 1), ("1", 2), ("0", 1), ("-1", 2), ("-2", 1)];
    assert_eq!(forms, want.map(|(f, m)| (f.to_string(), m)));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "edges": [[0, 5, 1.0]]}"#).unwrap();
    let o = qwsed(&["classify", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(0, 5)"));

    assert_eq!(qwsed(&["build", "path", "--param", "n=0"]).status.code(), Some(2));
    assert_eq!(qwsed(&["build", "no_such_family"]).status.code(), Some(2));

    let split = dir.path().join("split.json");
    std::fs::write(&split, r#"{"n": 4, "edges": [[0, 1, 1.0], [2, 3, 1.0]]}"#).unwrap();
    assert_eq!(qwsed(&["classify", path_str(&split)]).status.code(), Some(3));

    let g = build(&dir, "path", &["n=3"]);
    let o = qwsed(&["classify", path_str(&g), "--vertex", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex 7"));
}

#[test]
fn reproduce_cycles_suite() {
    let o = qwsed(&["reproduce", "--suite", "cycles", "--verbose"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains("criterion  3: PASS"));
    assert!(text.lines().any(|l| l.contains("[ok] C_8 sign at pi/2")));
}
