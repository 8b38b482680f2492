use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e7tensor"))
        .args(args)
        .output()
        .expect("spawn e7tensor")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn mults(v: &Value) -> Vec<(Vec<i64>, u64)> {
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let w = e["weight"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
            (w, e["mult"].as_u64().unwrap())
        })
        .collect()
}

#[test]
fn dim_of_a7_vector_rep() {
    let o = run(&["dim", "--algebra", "a7", "--w", "1,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn dim_of_e7_fundamentals() {
    let expected = [56u64, 133, 912, 1539, 8645, 27664, 365750];
    let mut got = Vec::new();
    for k in 0..7 {
        let mut l = vec!["0"; 7];
        l[k] = "1";
        let v = json(&["dim", "--algebra", "e7", "--w", &l.join(","), "--output", "json"]);
        got.push(v["dim"].as_u64().unwrap());
    }
    got.sort_unstable();
    let mut want = expected.to_vec();
    want.sort_unstable();
    assert_eq!(got, want);
}

#[test]
fn orbit72_first_row_of_reference_weight() {
    let o = run(&["orbit72", "--algebra", "e7", "--w", "1,1,2,2,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 72);
    assert_eq!(lines[0], "1 +1 1,1,11,1,1,2,1");
}

#[test]
fn orbit72_rejects_non_strict_weight() {
    let o = run(&["orbit72", "--algebra", "e7", "--w", "0,0,0,0,0,0,1"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn validate_embedded_table() {
    let o = run(&["validate"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("ok")));
}

#[test]
fn validate_reports_corrupted_table() {
    let table = include_str!("../../core/data/coset_words.txt");
    let bad = table.replacen("\n2 +1 3 2\n", "\n2 +1 2 3\n", 1);
    assert_ne!(bad, table, "corruption target not found");
    let dir = std::env::temp_dir().join(format!("e7tensor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("bad_words.txt");
    std::fs::write(&path, bad).unwrap();
    let o = run(&["validate", "--table", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("consistency failure ["), "{err}");
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["dim", "--algebra", "e9", "--w", "1"][..],
        &["dim", "--algebra", "a2", "--w", "1,x"],
        &["dim", "--algebra", "a2", "--w", "1,0,0"],
        &["dim", "--algebra", "a2", "--w", "1,0", "--bogus"],
        &["tensor", "--algebra", "a2", "--w", "1,0"],
        &["char", "--algebra", "a2", "--w", "1,0", "--backend", "poly1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn char_poly1_is_laurent_in_x() {
    let v = json(&[
        "char", "--algebra", "a7", "--w", "1,0,0,0,0,0,0", "--backend", "poly1", "--output", "json",
    ]);
    // Trace of the vector rep: 1+2+3+4+5+6+x+1/(720x).
    let num: Vec<&str> = v["value"]["numerator"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let den: Vec<&str> = v["value"]["denominator"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(num, ["1/720", "21", "1"]);
    assert_eq!(den, ["0", "1"]);
}

#[test]
fn tensor_a2_json_is_stable() {
    let args = ["tensor", "--algebra", "a2", "--w", "1,1", "--w2", "1,1", "--output", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["dim_check"]["lhs"], v["dim_check"]["rhs"]);
    assert_eq!(v["dim_check"]["lhs"].as_u64(), Some(64));
    assert_eq!(v["verification"]["passed"], Value::Bool(true));
    let m = mults(&v);
    assert!(m.contains(&(vec![1, 1], 2)));
    assert!(m.contains(&(vec![0, 0], 1)));
}

#[test]
fn tensor_seed_does_not_change_result() {
    let base = ["tensor", "--algebra", "a3", "--w", "1,0,1", "--w2", "0,1,0", "--output", "json"];
    let a = json(&[&base[..], &["--seed", "1"]].concat());
    let b = json(&[&base[..], &["--seed", "99"]].concat());
    assert_eq!(mults(&a), mults(&b));
}

#[test]
fn tensor_e7_l3_l4_matches_table() {
    let v = json(&[
        "tensor", "--algebra", "e7", "--w", "0,0,1,0,0,0,0", "--w2", "0,0,0,1,0,0,0", "--output", "json",
    ]);
    let mut got = mults(&v);
    let mut want: Vec<(Vec<i64>, u64)> = include_str!("../../core/tests/data/e7_l3_l4_decomposition.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let t: Vec<i64> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
            (t[2..].to_vec(), t[1] as u64)
        })
        .collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(v["dim_check"]["lhs"].as_u64(), Some(10_118_108_000));
    assert_eq!(v["dim_check"]["lhs"], v["dim_check"]["rhs"]);
}
