use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn magickit(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magickit"))
        .args(args)
        .env("MAGICKIT_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn zero_jordan(tag: &str, m: usize) -> Value {
    json!({ "tag": tag, "d": ["0", "0", "0"], "x": vec![vec!["0"; m]; 3] })
}

fn identity(tag: &str, m: usize) -> Value {
    json!({ "tag": tag, "d": ["1", "1", "1"], "x": vec![vec!["0"; m]; 3] })
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn catalog_suite_passes() {
    let tmp = TempDir::new().unwrap();
    let out = magickit(tmp.path(), &["verify", "--suite", "catalog"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rep = stdout_json(&out);
    assert_eq!(rep["failures"], 0);
    assert!(rep["checks"].as_u64().unwrap() > 0);
}

#[test]
fn classify_generic_point() {
    let tmp = TempDir::new().unwrap();
    let w = json!({ "tag": "R", "alpha": "1", "r": zero_jordan("R", 1), "sstar": zero_jordan("R", 1), "betastar": "1" });
    let f = write(&tmp, "w.json", &w);
    let out = magickit(tmp.path(), &["classify-triple", &f]);
    assert_eq!(out.status.code(), Some(0));
    let c = stdout_json(&out);
    assert_eq!(c["label"], "Generic");
    assert_eq!(c["Q"], "9");
    assert_eq!(c["gradZero"], false);
    // The first Q-dependent command calibrates and fills the cache.
    assert!(tmp.path().join("calibration-R.json").exists());
}

#[test]
fn phi_of_identity_over_octonions() {
    let tmp = TempDir::new().unwrap();
    let f = write(&tmp, "p.json", &identity("O", 8));
    let out = magickit(tmp.path(), &["phi", "--algebra", "O", &f]);
    assert_eq!(out.status.code(), Some(0));
    let w = stdout_json(&out);
    assert_eq!(w["alpha"], "1");
    assert_eq!(w["betastar"], "1");
    assert_eq!(w["r"], identity("O", 8));
    assert_eq!(w["sstar"], identity("O", 8));
}

#[test]
fn phi_with_scale() {
    let tmp = TempDir::new().unwrap();
    let f = write(&tmp, "p.json", &json!({ "z": "2", "P": identity("C", 2) }));
    let w = stdout_json(&magickit(tmp.path(), &["phi", "--algebra", "C", &f]));
    assert_eq!(w["alpha"], "8");
    assert_eq!(w["r"]["d"], json!(["4", "4", "4"]));
    assert_eq!(w["sstar"]["d"], json!(["2", "2", "2"]));
    assert_eq!(w["betastar"], "1");
}

#[test]
fn input_errors_exit_2() {
    let tmp = TempDir::new().unwrap();
    let bad = tmp.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let bad = bad.to_string_lossy().into_owned();
    assert_eq!(magickit(tmp.path(), &["classify-triple", &bad]).status.code(), Some(2));
    assert_eq!(magickit(tmp.path(), &["calibrate", "--algebra", "X"]).status.code(), Some(2));
    assert_eq!(magickit(tmp.path(), &["verify", "--suite", "quartic"]).status.code(), Some(2));
    assert_eq!(magickit(tmp.path(), &["tables", "--m", "3"]).status.code(), Some(2));
    let p = write(&tmp, "p.json", &identity("R", 1));
    assert_eq!(magickit(tmp.path(), &["phi", "--algebra", "H", &p]).status.code(), Some(2));
    let missing = tmp.path().join("missing.json").to_string_lossy().into_owned();
    assert_eq!(magickit(tmp.path(), &["classify-jordan", &missing]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_1_with_counterexample() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(magickit(tmp.path(), &["calibrate", "--algebra", "R"]).status.code(), Some(0));
    let path = tmp.path().join("calibration-R.json");
    let mut cal: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    cal["lambda_q"] = json!("5");
    std::fs::write(&path, cal.to_string()).unwrap();
    let out = magickit(tmp.path(), &["verify", "--suite", "discriminant", "--algebra", "R", "--trials", "5", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let rep = stdout_json(&out);
    assert_eq!(rep["counterexample"]["seed"], 3);
    assert!(rep["counterexample"]["inputs"]["p"].is_array());
    // --no-cache ignores the tampered file.
    let out = magickit(
        tmp.path(),
        &["--no-cache", "verify", "--suite", "discriminant", "--algebra", "R", "--trials", "5"],
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_output_is_reproducible() {
    let tmp = TempDir::new().unwrap();
    let args = ["verify", "--suite", "all", "--algebra", "C", "--trials", "4", "--seed", "11"];
    let a = magickit(tmp.path(), &args);
    let b = magickit(tmp.path(), &args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let reps = stdout_json(&a);
    assert_eq!(reps.as_array().unwrap().len(), 12);
    assert!(reps[0].get("elapsedMs").is_none());
    let timed = stdout_json(&magickit(tmp.path(), &["--timing", "verify", "--suite", "jordan", "--algebra", "C"]));
    assert!(timed["elapsedMs"].is_u64());
}

#[test]
fn tables_filtering_and_text() {
    let tmp = TempDir::new().unwrap();
    let d = stdout_json(&magickit(tmp.path(), &["tables", "--row", "3", "--m", "8"]));
    let rows = d["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let dims: Vec<i64> = rows.iter().map(|r| r["values"][0][1].as_i64().unwrap()).collect();
    assert_eq!(dims, [33, 42, 27]);
    let text = magickit(tmp.path(), &["--format", "text", "tables"]);
    assert_eq!(text.status.code(), Some(0));
    let s = String::from_utf8(text.stdout).unwrap();
    assert!(s.contains("magic square"));
    assert!(s.contains("0 failed"));
}

#[test]
fn jordan_and_hyperplane_classification() {
    let tmp = TempDir::new().unwrap();
    let rank2 = json!({ "tag": "H", "d": ["1", "1", "0"], "x": vec![vec!["0"; 4]; 3] });
    let f = write(&tmp, "j.json", &rank2);
    let out = stdout_json(&magickit(tmp.path(), &["classify-jordan", &f]));
    assert_eq!(out["rank"], "Rank2");
    assert_eq!(out["det"], "0");
    let sec = stdout_json(&magickit(tmp.path(), &["classify-hyperplane", &f]));
    assert_eq!(sec["section"], "OneQuadraticSingularity");

    let h = json!({ "tag": "H", "alpha": "0", "r": identity("H", 4), "sstar": zero_jordan("H", 4), "betastar": "0" });
    let f = write(&tmp, "h.json", &h);
    let out = stdout_json(&magickit(tmp.path(), &["classify-hyperplane", &f]));
    assert_eq!(out["type"], "Type2OrdinaryDoublePoint");
}

#[test]
fn psi_at_unit_point() {
    let tmp = TempDir::new().unwrap();
    let a = json!({ "tag": "R", "alpha": "0", "r": zero_jordan("R", 1), "sstar": zero_jordan("R", 1), "betastar": "0" });
    let f = write(&tmp, "psi.json", &json!({ "u": "1", "A": a, "v": "0" }));
    let out = magickit(tmp.path(), &["psi", "--algebra", "R", &f]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let p = stdout_json(&out);
    assert_eq!(p["u4"], "1");
    assert_eq!(p["u3v"], "0");
    assert_eq!(p["scalar"], "0");
    assert!(p["V"].as_array().unwrap().iter().all(|x| x == "0"));
    assert_eq!(p["g0"]["inSpan"], true);
}

#[test]
fn calibrate_reports_constants() {
    let tmp = TempDir::new().unwrap();
    let out = magickit(tmp.path(), &["calibrate", "--algebra", "Zero"]);
    assert_eq!(out.status.code(), Some(0));
    let c = stdout_json(&out);
    assert_eq!(c["tag"], "Zero");
    assert_eq!(c["lambda_pair"], "6");
    assert_eq!(c["hyperdet_scale"], "9");
}
