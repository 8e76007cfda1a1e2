use std::path::PathBuf;
use std::process::{Command, Output};

use realrep::decomp::DecompositionReport;
use serde_json::Value;

fn realrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("realrep-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

fn dims(report: &DecompositionReport) -> Vec<usize> {
    let mut d: Vec<usize> = report.components.iter().map(|c| c.dim).collect();
    d.sort();
    d
}

fn decompose_json(args: &[&str]) -> DecompositionReport {
    let mut all = vec!["decompose"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", "json"]);
    let o = realrep(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn so3_quadratics() {
    let r = decompose_json(&["--algebra", "so(3)", "--cartan", "e1", "--rep", "poly:2"]);
    assert_eq!(dims(&r), vec![1, 5]);
    assert!(r.checks.unwrap().all_passed());
}

#[test]
fn so22_roots() {
    let o = realrep(&["roots", "--algebra", "so(2,2)", "--cartan", "e2,e5", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut got: Vec<Vec<String>> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r["values"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().to_string())
                .collect()
        })
        .collect();
    got.sort();
    let mut want: Vec<Vec<String>> = [["1", "1"], ["-1", "-1"], ["1", "-1"], ["-1", "1"]]
        .iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn so4_adjoint() {
    let r = decompose_json(&["--algebra", "so(4)", "--cartan", "e1,e6", "--rep", "adjoint"]);
    assert_eq!(dims(&r), vec![3, 3]);
}

#[test]
fn json_round_trip_and_check() {
    let args = ["--algebra", "so(1,3)", "--cartan", "e1,e6", "--rep", "poly:2"];
    let r = decompose_json(&args);
    let text = serde_json::to_string(&r).unwrap();
    let back: DecompositionReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);

    let path = temp_file("report.json", &text);
    let mut check = vec!["check", "--report", path.to_str().unwrap()];
    check.extend_from_slice(&args);
    assert_eq!(realrep(&check).status.code(), Some(0));

    // two components claiming the same subspace
    let mut bad = r.clone();
    bad.components[1].basis = bad.components[0].basis.clone();
    let path = temp_file("bad-report.json", &serde_json::to_string(&bad).unwrap());
    check[2] = path.to_str().unwrap();
    let o = realrep(&check);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn text_and_json_show_the_same_rows() {
    let args = ["--algebra", "so(3)", "--rep", "end-left"];
    let r = decompose_json(&args);
    let o = realrep(&["decompose", args[0], args[1], args[2], args[3]]);
    let text = stdout(&o);
    for c in &r.components {
        for v in c.basis.as_rational().unwrap().vectors() {
            let row: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            assert!(text.contains(&format!("[{}]", row.join(", "))));
        }
    }
}

#[test]
fn job_file_with_inline_rep() {
    // so(3) with its defining matrices given as the representation
    let gens = r#"[
        [["0","1","0"],["-1","0","0"],["0","0","0"]],
        [["0","0","1"],["0","0","0"],["-1","0","0"]],
        [["0","0","0"],["0","0","1"],["0","-1","0"]]
    ]"#;
    let job = format!(r#"{{"n": 3, "generators": {gens}, "cartan": [1], "rep": {{"images": {gens}}}}}"#);
    let path = temp_file("job.json", &job);
    let r = decompose_json(&["--in", path.to_str().unwrap()]);
    assert_eq!(dims(&r), vec![3]);

    let job = format!(r#"{{"n": 3, "generators": {gens}, "cartan": [["1","0","0"]], "rep": "poly:2"}}"#);
    let path = temp_file("job2.json", &job);
    let r = decompose_json(&["--in", path.to_str().unwrap()]);
    assert_eq!(dims(&r), vec![1, 5]);
}

#[test]
fn exit_codes() {
    // Cartan element [[0,1],[2,0]] of sl(2): ad eigenvalues ±2√2
    let o = realrep(&["roots", "--algebra", "sl(2)", "--cartan", r#"[["0","1","2"]]"#]);
    assert_eq!(o.status.code(), Some(3));
    let o = realrep(&["roots", "--algebra", "so(7,7,7)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = realrep(&["roots", "--algebra", "so(3)", "--cartan", "e9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = realrep(&["decompose", "--algebra", "so(3)"]);
    assert_eq!(o.status.code(), Some(2));
    let path = temp_file("broken.json", "{\"n\": 2, \"generators\": [[[\"x\"]]]}");
    let o = realrep(&["info", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn omega_and_weights_commands() {
    let o = realrep(&["omega", "--algebra", "so(3)", "--out", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["letters"], serde_json::json!([0]));
    assert_eq!(
        v["omega_defining"],
        serde_json::json!([["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]])
    );
    let o = realrep(&["weights", "--algebra", "so(1,3)", "--rep", "adjoint", "--out", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 1);
    assert_eq!(v["orbits"][0]["weights"].as_array().unwrap().len(), 2);
}
