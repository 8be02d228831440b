use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logforms"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn temp_arrangement(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_boolean() {
    let o = run(&["analyze", data("boolean3.arr").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("free: true, exponents [1, 1, 1]"), "{s}");
    assert!(s.contains("purity: pure"), "{s}");
}

#[test]
fn analyze_zero_one_json() {
    let path = data("zero_one_4.arr");
    let args = ["analyze", path.to_str().unwrap(), "--json", "--ext", "1:2"];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["freeness"]["free"], false);
    assert_eq!(v["pd"]["omega"][1], 2);
    assert_eq!(v["purity"]["pure"], true);
    assert_eq!(v["wakefield"]["prediction"], "inapplicable");
    assert_eq!(v["wakefield"]["freeOutsidePointsOk"], true);
    let series = &v["ext"][0]["series"];
    assert!(series["numerator"].is_array() && series["poleOrder"].is_u64());
    let keys = [
        "\"input\"",
        "\"lattice\"",
        "\"freeness\"",
        "\"pd\"",
        "\"tame\"",
        "\"purity\"",
        "\"wakefield\"",
        "\"ext\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "key order {positions:?}");
    assert_eq!(run(&args).stdout, o.stdout, "output is not deterministic");
}

#[test]
fn analyze_rejects_bad_input() {
    let o = run(&["analyze", data("not_reduced.arr").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not reduced"));

    let f = temp_arrangement("vars 3\n1 0 0\n0 1 x\n");
    let o = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = run(&["analyze", "/nonexistent/file.arr"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["analyze", data("boolean3.arr").to_str().unwrap(), "--field", "fp:10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn field_flag_overrides_file() {
    let f = temp_arrangement("field fp 7\nvars 2\n1 0\n0 1\n1 1\n");
    let o = run(&["analyze", f.path().to_str().unwrap()]);
    assert!(stdout(&o).contains("over fp:7"), "{}", stdout(&o));
    let o = run(&["analyze", f.path().to_str().unwrap(), "--field", "q"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("over q"), "{}", stdout(&o));
}

#[test]
fn bad_characteristic_warns() {
    let f = temp_arrangement("field fp 3\nvars 2\n1 0\n0 1\n1 1\n");
    let o = run(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn suite_runs() {
    let o = run(&["suite", "--max-n", "6", "--max-l", "4", "--field", "fp:101"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("19/19 cases passed"));

    let o = run(&["suite", "--max-n", "5", "--max-l", "4", "--field", "q", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);

    let o = run(&["suite", "--max-n", "4", "--max-l", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn suite_sequential_matches_parallel() {
    let a = run(&["suite", "--max-n", "5", "--max-l", "4", "--jobs", "1", "--json"]);
    let b = run(&["suite", "--max-n", "5", "--max-l", "4", "--jobs", "2", "--json"]);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for c in v["cases"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("millis");
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn oracle_tables() {
    let o = run(&[
        "oracle",
        data("boolean3.arr").to_str().unwrap(),
        "--lo",
        "0",
        "--hi",
        "4",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    let d1: Vec<i64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["module"] == "D_1")
        .map(|r| r["linearAlgebra"].as_i64().unwrap())
        .collect();
    assert_eq!(d1, vec![3, 9, 18, 30, 45]);

    let o = run(&[
        "oracle",
        data("generic_4_3.arr").to_str().unwrap(),
        "--lo",
        "-8",
        "--hi",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("MISMATCH"));

    let o = run(&[
        "oracle",
        data("boolean3.arr").to_str().unwrap(),
        "--lo",
        "3",
        "--hi",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().is_empty());
}

#[test]
fn expand_series() {
    let o = run(&["expand", "rank3:5"]);
    assert_eq!(stdout(&o).trim(), "2t^-1 + 2");
    let o = run(&[
        "expand",
        "T",
        "--truncate-s",
        "5",
        "--truncate-u",
        "3",
        "--truncate-v",
        "1",
    ]);
    assert!(stdout(&o).contains("s^5 u^3 v^1: 2t^-1 + 2"), "{}", stdout(&o));
    let o = run(&["expand", "Q:3:5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["expand", "R"]);
    assert_eq!(o.status.code(), Some(2));
}
