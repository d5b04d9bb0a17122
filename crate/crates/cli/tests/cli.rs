use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_diagcoinv"));
    for var in [
        "DIAGCOINV_BUDGET",
        "DIAGCOINV_CELL_BUDGET",
        "DIAGCOINV_FORM_BUDGET",
        "DIAGCOINV_DIAGONAL_RANK",
        "DIAGCOINV_FORMAT",
    ] {
        cmd.env_remove(var);
    }
    cmd.args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{args:?}: {e}\nstderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (v, out.status.code().unwrap())
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn result<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == name)
        .unwrap_or_else(|| panic!("no result {name}"))
}

#[test]
fn golden_reports() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (label, rank) in [("A", "1"), ("A", "2"), ("B", "2"), ("G", "2")] {
        let (v, code) = report(&["verify", "all", label, rank]);
        assert_eq!(code, 0, "{label}{rank}");
        let got = serde_json::to_string_pretty(&without_timings(v)).unwrap() + "\n";
        let path = dir.join(format!("verify_all_{label}{rank}.json"));
        if update {
            std::fs::write(&path, &got).unwrap();
        } else {
            let want = std::fs::read_to_string(&path)
                .expect("golden file present; regenerate with UPDATE_GOLDEN=1");
            assert_eq!(got, want, "{label}{rank} differs from {}", path.display());
        }
    }
}

#[test]
fn reruns_are_identical_apart_from_timings() {
    let a = run(&["verify", "all", "B", "2"]);
    let b = run(&["verify", "all", "B", "2"]);
    let strip = |o: &Output| without_timings(serde_json::from_slice(&o.stdout).unwrap());
    assert_eq!(
        serde_json::to_vec(&strip(&a)).unwrap(),
        serde_json::to_vec(&strip(&b)).unwrap()
    );
}

#[test]
fn info_examples() {
    let (v, code) = report(&["info", "A", "2"]);
    assert_eq!(code, 0);
    let d = &v["objects"]["root_data"];
    assert_eq!(
        (d["h"].as_u64(), d["N"].as_u64(), d["group_order"].as_u64()),
        (Some(3), Some(3), Some(6))
    );

    let (v, _) = report(&["info", "G", "2"]);
    assert_eq!(v["objects"]["root_data"]["h"], 6);
    assert_eq!(v["objects"]["root_data"]["h_plus_1_pow_n"], 49);

    let (v, _) = report(&["info", "B", "2"]);
    assert_eq!(v["objects"]["root_data"]["exponents"], json!([1, 3]));
}

#[test]
fn hilbert_series_of_a2() {
    let (v, code) = report(&["series", "hilbL", "A", "2"]);
    assert_eq!(code, 0);
    let want: Vec<Value> = [(-3, 1), (-2, 2), (-1, 3), (0, 4), (1, 3), (2, 2), (3, 1)]
        .iter()
        .map(|&(e, c)| json!([e, c, 1]))
        .collect();
    assert_eq!(v["objects"]["hilbL"], Value::Array(want));
}

#[test]
fn invariant_series_of_a1() {
    let (v, code) = report(&["series", "p", "A", "1", "--trunc", "6"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["objects"]["p"]["expansion"],
        json!([[0, 1, 1], [2, 1, 1], [4, 1, 1], [6, 1, 1]])
    );
    assert_eq!(
        v["objects"]["p"]["denominator"],
        json!([[0, 1, 1], [2, -1, 1]])
    );
}

#[test]
fn diagonal_table_of_a1() {
    let (v, code) = report(&["series", "DW", "A", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["objects"]["DW"]["cells"],
        json!([[0, 0, 1], [0, 1, 1], [1, 0, 1]])
    );
}

#[test]
fn sign_isotypic_series_have_one_entry_per_index() {
    let (v, code) = report(&["series", "eMc", "B", "2", "--m", "2"]);
    assert_eq!(code, 0);
    for i in 0..=2 {
        assert!(v["objects"].get(format!("eMc/i={i}")).is_some());
    }
}

#[test]
fn suite_examples() {
    let (v, code) = report(&["verify", "series", "B", "2"]);
    assert_eq!(code, 0);
    let r = result(&v, "series/alternating sum");
    assert_eq!(
        (r["got"].as_str(), r["pass"].as_bool()),
        (Some("1"), Some(true))
    );

    let (v, code) = report(&["verify", "characters", "A", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        result(&v, "characters/character vs fixed points")["got"],
        "all 6 elements"
    );

    let (v, code) = report(&["verify", "cherednik", "B", "2"]);
    assert_eq!(code, 0);
    let r = result(&v, "cherednik/trivial module");
    assert!(r["expected"].as_str().unwrap().contains("c_s=1/4, c_l=1/4"));
    assert_eq!(r["pass"], true);
}

#[test]
fn failing_check_exits_one() {
    let (v, code) = report(&["verify", "cherednik", "A", "2", "--c", "1/2"]);
    assert_eq!(code, 1);
    assert_eq!(result(&v, "cherednik/trivial module")["pass"], false);
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["info", "Z", "3"][..],
        &["info", "G", "3"],
        &["info", "A", "2", "--no-such-flag"],
        &["info", "A", "2", "--budget", "0"],
        &["verify", "cherednik", "A", "2", "--c", "1/0"],
        &["verify", "typeB", "A", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_violations_exit_three_and_name_the_budget() {
    let out = run(&["verify", "characters", "E", "8"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("group order") && err.contains("696729600"),
        "{err}"
    );

    let out = run(&["verify", "coinvariants", "C", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("diagonal rank"));

    let out = run(&[
        "verify",
        "coinvariants",
        "A",
        "2",
        "--max-bidegree",
        "1",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("incomplete"));
}

#[test]
fn budgets_read_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_diagcoinv"))
        .env("DIAGCOINV_BUDGET", "5")
        .args(["verify", "characters", "A", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn writes_to_out_path_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = run(&[
        "verify",
        "series",
        "A",
        "1",
        "--format",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("PASS  series/alternating sum"));
    assert!(!text.contains("FAIL"));
}
