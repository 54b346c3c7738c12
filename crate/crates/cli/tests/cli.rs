use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tkklab")).args(args).output().expect("spawn tkklab")
}

fn run_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tkklab")).env("TKKLAB_THREADS", threads).args(args).output().expect("spawn tkklab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn com_dims_b1() {
    let v = json(&["dims", "--algebra", "com", "--b", "1", "--max-deg", "4"]);
    let dims: Vec<i64> = v.as_array().unwrap().iter().map(|r| r["dim"].as_i64().unwrap()).collect();
    assert_eq!(dims, vec![1, 3, 1, 0, 0]);
}

#[test]
fn ass_dims_with_x_letter() {
    let v = json(&["dims", "--algebra", "ass", "--a", "1", "--b", "1", "--max-deg", "5"]);
    let dims: Vec<i64> = v.as_array().unwrap().iter().map(|r| r["dim"].as_i64().unwrap()).collect();
    // 2^(d+2) - d - 3 for d ≥ 1
    let expect: Vec<i64> = (0..=5).map(|d| if d == 0 { 1 } else { (1 << (d + 2)) - d - 3 }).collect();
    assert_eq!(dims, expect);
}

#[test]
fn ass_homology_truncated_row() {
    let o = run(&["--format", "tsv", "homology", "--algebra", "ass", "--b", "2", "--max-k", "2", "--truncate"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().find(|l| l.starts_with("2\t")).expect("row k=2").split('\t').collect();
    assert_eq!(row[1], "20");
    assert_eq!(row[2], "L(4)^4");
}

#[test]
fn character_from_file_matches_builtin() {
    let from_file = json(&["character", "--input", &data("com_b2.json"), "--max-deg", "4"]);
    let builtin = json(&["dims", "--algebra", "com", "--b", "2", "--max-deg", "4"]);
    let a: Vec<_> = from_file.as_array().unwrap().iter().map(|r| r["dim"].clone()).collect();
    let b: Vec<_> = builtin.as_array().unwrap().iter().map(|r| r["dim"].clone()).collect();
    assert_eq!(a, b);
}

#[test]
fn dual_round_trips_through_json() {
    let dual = json(&["dual", "--input", &data("com_b1.json")]);
    let path = std::env::temp_dir().join(format!("tkklab_dual_{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&dual).unwrap()).unwrap();
    let again = json(&["groebner", "--input", path.to_str().unwrap(), "--max-deg", "3", "--verify"]);
    std::fs::remove_file(&path).ok();
    assert!(again.is_object());
    let back = json(&["dual", "--input", &data("com_b1.json")]);
    assert_eq!(dual, back);
}

#[test]
fn groebner_verify_certifies_quadratic_basis() {
    let o = run(&["groebner", "--input", &data("ass_b1.json"), "--max-deg", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("failures: 0"));
}

#[test]
fn quick_suite_passes() {
    let o = run(&["verify", "--suite", "quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn non_jordan_table_exits_one() {
    let path = std::env::temp_dir().join(format!("tkklab_nj_{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"basis":["x","y"],"products":[{"x":"x","y":"x","value":{"y":"1"}},{"x":"x","y":"y","value":{"x":"1"}},{"x":"y","y":"y","value":{"x":"1","y":"1"}}]}"#,
    )
    .unwrap();
    let o = run(&["jordan", "--instance", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_and_schema_errors_exit_two() {
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--algebra", "com"]).status.code(), Some(2));
    let path = std::env::temp_dir().join(format!("tkklab_bad_{}.json", std::process::id()));
    std::fs::write(&path, "{").unwrap();
    let o = run(&["dual", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_independent_of_thread_count() {
    let args = ["--format", "json", "homology", "--algebra", "com", "--b", "3", "--max-k", "4", "--schur"];
    let one = run_threads(&args, "1");
    let four = run_threads(&args, "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let lie = ["lie-closure", "--b", "2", "--max-deg", "5", "--check-theorem5"];
    assert_eq!(run_threads(&lie, "1").stdout, run_threads(&lie, "3").stdout);
}
