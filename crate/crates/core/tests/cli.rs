use std::fs;
use std::path::{Path, PathBuf};

use orbitdeg::cli::run;
use orbitdeg::OrbitReport;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn orbitdeg(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("orbitdeg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn corpus_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

/// Write the `compute` input of a corpus fixture to its own file.
fn descriptor_from_fixture(dir: &Path, fixture: &str) -> PathBuf {
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(corpus_file(fixture)).unwrap()).unwrap();
    let path = dir.join(fixture);
    fs::write(&path, v["input"]["compute"].to_string()).unwrap();
    path
}

fn report(r: &Run) -> OrbitReport {
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn compute_biflecnode_quartic() {
    let dir = tempfile::tempdir().unwrap();
    let path = descriptor_from_fixture(dir.path(), "09_biflecnode_quartic.json");
    let r = report(&orbitdeg(&["compute", path.to_str().unwrap()]));
    assert_eq!(r.predegree.to_string(), "5568");
    assert_eq!(r.degree.unwrap().to_string(), "232");
}

#[test]
fn compute_tricuspidal_quartic() {
    let dir = tempfile::tempdir().unwrap();
    let path = descriptor_from_fixture(dir.path(), "13_tricuspidal_quartic.json");
    let r = report(&orbitdeg(&["compute", path.to_str().unwrap()]));
    assert_eq!(r.degree.unwrap().to_string(), "400");
}

#[test]
fn report_round_trips_through_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = descriptor_from_fixture(dir.path(), "11_cuspidal_cubic.json");
    let run = orbitdeg(&["compute", path.to_str().unwrap()]);
    let r = report(&run);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", run.stdout);
}

#[test]
fn malformed_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"degree\": 4,").unwrap();
    let r = orbitdeg(&["compute", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("malformed JSON"), "{}", r.stderr);
}

#[test]
fn missing_file_exits_2() {
    let r = orbitdeg(&["compute", "/nonexistent/curve.json"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("/nonexistent/curve.json"));
}

#[test]
fn invalid_descriptor_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    fs::write(&path, r#"{"degree": 4, "nonlinear": [{"deg": 3, "mult": 1}]}"#).unwrap();
    let r = orbitdeg(&["compute", path.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("failed validation"), "{}", r.stderr);
}

#[test]
fn usage_error_exits_2() {
    assert_eq!(orbitdeg(&["frobnicate"]).code, 2);
    assert_eq!(orbitdeg(&["contribution", "type4", "--from", "1", "--to", "4,0", "--s", "1"]).code, 2);
    assert_eq!(orbitdeg(&["--help"]).code, 0);
}

#[test]
fn thm51_reports_absorbed_flexes() {
    let r = orbitdeg(&["contribution", "thm51", "--m", "2", "--n", "3", "--essential", "3"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["absorbs"], 8);
    assert_eq!(v["term"][6], "-4/15");
}

#[test]
fn type5_and_type3_contributions() {
    let r = orbitdeg(&["contribution", "type5", "--ell", "1", "--W", "5", "--s", "1,1"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["term"].as_array().unwrap()[6..], serde_json::json!(["-5/6", "31/14", "-3"]).as_array().unwrap()[..]);

    let r = orbitdeg(&["contribution", "type3", "--lines", "1,1"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["term"].as_array().unwrap().iter().all(|c| c == "0"));
}

#[test]
fn invalid_side_exits_1() {
    let r = orbitdeg(&["contribution", "type4", "--from", "0,1", "--to", "1,0", "--s", "1"]);
    assert_eq!(r.code, 1, "{}", r.stderr);
    assert!(r.stderr.contains("slope"), "{}", r.stderr);
}

#[test]
fn union_and_scale_commands() {
    let dir = tempfile::tempdir().unwrap();
    let conic = descriptor_from_fixture(dir.path(), "01_smooth_conic.json");
    let line = dir.path().join("line.json");
    fs::write(&line, r#"{"degree": 1, "linear": [{"mult": 1, "meets": []}]}"#).unwrap();

    let args = ["union", conic.to_str().unwrap(), line.to_str().unwrap(), "--tangencies", "1", "--stabilizer", "4"];
    let r = report(&orbitdeg(&args));
    assert_eq!((r.orbit_dimension, r.degree.unwrap().to_string()), (6, "42".to_string()));

    let r = report(&orbitdeg(&["scale", conic.to_str().unwrap(), "--m", "2"]));
    assert_eq!(r.predegree.to_string(), "256");
}

#[test]
fn newton_command_reads_support() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("supp.json");
    fs::write(&path, r#"{"degree": 4, "terms": [[4, 0, "1"], [2, 1, "-2"], [0, 2, "1"], [3, 1, "-1"]]}"#).unwrap();
    let r = orbitdeg(&["newton", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["invariants"], serde_json::json!({"m": 2, "n": 4}));
    assert_eq!(v["sides"][0]["S"], 2);
    assert_eq!(v["sides"][0]["profile"], serde_json::json!([[2, 1]]));
}

#[test]
fn pristine_corpus_passes() {
    let r = orbitdeg(&["--format", "pretty", "corpus"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(!r.stdout.contains("FAIL"));
    assert!(r.stdout.contains("PASS  nine_cuspidal_sextic"));
}

#[test]
fn perturbed_corpus_names_the_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for entry in fs::read_dir(corpus_file("")).unwrap() {
        let p = entry.unwrap().path();
        fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let target = dir.path().join("14_nine_cuspidal_sextic.json");
    let text = fs::read_to_string(&target).unwrap().replace("\"908064\"", "\"908065\"");
    fs::write(&target, text).unwrap();

    let r = orbitdeg(&["--format", "pretty", "corpus", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FAIL  nine_cuspidal_sextic"), "{}", r.stdout);
    assert!(r.stdout.contains("predegree: expected 908065, got 908064"), "{}", r.stdout);
    assert!(r.stderr.contains("FAIL nine_cuspidal_sextic"));
    assert_eq!(r.stdout.matches("FAIL").count(), 1);
}

#[test]
fn strict_erratum_breaks_nodal_quartic() {
    let r = orbitdeg(&["--erratum", "strict", "--format", "pretty", "corpus"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("FAIL  nodal_quartic_1"), "{}", r.stdout);
    assert!(r.stdout.contains("predegree: expected 12432, got -4848"), "{}", r.stdout);
}

#[test]
fn precondition_violation_exits_1() {
    let r = orbitdeg(&["contribution", "type2", "--degree", "2", "--e", "3", "--m", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("precondition"), "{}", r.stderr);
}
