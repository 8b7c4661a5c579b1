use std::io::Write;
use std::process::{Command, Output};

use hook_immanant::Poly;
use serde_json::Value;

fn hookimm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookimm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn edge_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const K3: &str = "# triangle\n3 3\n1 2\n2 3\n1 3\n";

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(out)).unwrap()
}

#[test]
fn adjacency_of_an_edge() {
    let v = json(&hookimm(&[
        "poly",
        "--graph6",
        "A_",
        "--matrix",
        "adjacency",
        "--k",
        "1",
        "--method",
        "oracle",
        "--format",
        "json",
    ]));
    assert_eq!(v["coeffs"], serde_json::json!(["-1", "0", "1"]));
    assert_eq!(v["n"], 2);
    assert_eq!(v["beta"], "0");
    assert_eq!(v["method"], "oracle");
}

#[test]
fn every_method_agrees_on_the_triangle() {
    let f = edge_file(K3);
    let path = f.path().to_str().unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec![
            "poly",
            "--edges",
            path,
            "--matrix",
            "laplacian",
            "--format",
            "json",
        ];
        args.extend_from_slice(extra);
        let v = json(&hookimm(&args));
        let arr = v.as_array().unwrap().clone();
        assert_eq!(arr.len(), 3);
        arr.into_iter()
            .map(|r| r["coeffs"].clone())
            .collect::<Vec<_>>()
    };
    let oracle = run(&["--method", "oracle"]);
    assert_eq!(run(&["--method", "vertex", "--pivot", "2"]), oracle);
    assert_eq!(run(&["--method", "edge", "--edge", "1,3"]), oracle);
    assert_eq!(oracle[2], serde_json::json!(["-12", "15", "-6", "1"]));
}

#[test]
fn immanants_of_the_triangle_laplacian() {
    let f = edge_file(K3);
    let out = hookimm(&[
        "imm",
        "--edges",
        f.path().to_str().unwrap(),
        "--matrix",
        "laplacian",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap())
        .collect();
    assert_eq!(values, ["0", "18", "12"]);
    let out = hookimm(&[
        "imm",
        "--edges",
        f.path().to_str().unwrap(),
        "--matrix",
        "laplacian",
        "--k",
        "3",
        "--method",
        "vertex",
    ]);
    assert_eq!(stdout(&out).trim(), "d_3 = 12");
}

#[test]
fn out_of_range_k_warns() {
    let f = edge_file(K3);
    let out = hookimm(&[
        "poly",
        "--edges",
        f.path().to_str().unwrap(),
        "--matrix",
        "signless",
        "--k",
        "0",
        "--format",
        "json",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(json(&out)["coeffs"], serde_json::json!([]));
}

#[test]
fn json_coefficients_round_trip() {
    let f = edge_file("4 4\n1 2\n2 3\n3 4\n4 1\n");
    let v = json(&hookimm(&[
        "poly",
        "--edges",
        f.path().to_str().unwrap(),
        "--beta",
        "1/3",
        "--gamma",
        "-5/2",
        "--format",
        "json",
    ]));
    for record in v.as_array().unwrap() {
        let raw = serde_json::to_string(&record["coeffs"]).unwrap();
        let strings: Vec<String> = serde_json::from_str(&raw).unwrap();
        let p = Poly::from_strings(&strings).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), raw);
    }
}

#[test]
fn digraphs_use_arcs() {
    let f = edge_file("2 2 directed\n1 2\n2 1\n");
    let path = f.path().to_str().unwrap();
    let oracle = json(&hookimm(&[
        "poly", "--edges", path, "--beta", "2", "--gamma", "5", "--method", "oracle", "--format",
        "json",
    ]));
    let arc = json(&hookimm(&[
        "poly", "--edges", path, "--beta", "2", "--gamma", "5", "--method", "edge", "--edge",
        "2,1", "--format", "json",
    ]));
    assert_eq!(arc.as_array().unwrap().len(), 2);
    for (a, b) in arc
        .as_array()
        .unwrap()
        .iter()
        .zip(oracle.as_array().unwrap())
    {
        assert_eq!(a["coeffs"], b["coeffs"]);
    }
    let out = hookimm(&["cycles", "--edges", path, "--vertex", "1"]);
    assert_eq!(stdout(&out), "length,vertices\n2,1 2\n");
}

#[test]
fn cycles_through_k4() {
    let out = hookimm(&["cycles", "--graph6", "C~", "--vertex", "1"]);
    assert_eq!(stdout(&out).lines().count(), 1 + 6);
    let out = hookimm(&["cycles", "--graph6", "C~", "--edge", "1-2"]);
    assert_eq!(stdout(&out).lines().count(), 1 + 4);
}

#[test]
fn character_table() {
    let out = hookimm(&["chars", "--n", "3"]);
    assert_eq!(stdout(&out), "k,3,2 1,1 1 1\n1,1,-1,1\n2,-1,0,2\n3,1,1,1\n");
}

#[test]
fn verify_suites() {
    for (suite, n) in [
        ("bipartite", "4"),
        ("characters", "5"),
        ("oracle", "3"),
        ("trees", "6"),
    ] {
        let out = hookimm(&["verify", "--suite", suite, "--n", n]);
        assert!(out.status.success(), "{suite}: {}", stdout(&out));
        assert!(stdout(&out).starts_with("PASS"));
    }
    let out = hookimm(&["verify", "--suite", "alpha-coefficient"]);
    assert!(stdout(&out).contains("note: 2a^2+2a+1"));
}

#[test]
fn bench_prints_csv() {
    let out = hookimm(&["bench", "--family", "random", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("n,method,milliseconds"));
    assert_eq!(text.lines().count(), 1 + 2 * 4);
}

#[test]
fn exit_codes() {
    let f = edge_file(K3);
    let path = f.path().to_str().unwrap();
    // usage
    assert_eq!(hookimm(&["poly", "--edges", path]).status.code(), Some(1));
    assert_eq!(
        hookimm(&["poly", "--edges", path, "--bogus"]).status.code(),
        Some(1)
    );
    assert_eq!(
        hookimm(&[
            "poly",
            "--edges",
            path,
            "--matrix",
            "laplacian",
            "--pivot",
            "1"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        hookimm(&["poly", "--edges", path, "--matrix", "a-alpha", "--alpha", "3/2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        hookimm(&[
            "poly",
            "--edges",
            path,
            "--matrix",
            "laplacian",
            "--method",
            "vertex",
            "--pivot",
            "9"
        ])
        .status
        .code(),
        Some(1)
    );
    // parse
    for bad in [
        "",
        "3\n",
        "2 1\n1 1\n",
        "2 2\n1 2\n1 2\n",
        "2 1\n1 3\n",
        "3 2\n1 2\n",
    ] {
        let g = edge_file(bad);
        let out = hookimm(&[
            "poly",
            "--edges",
            g.path().to_str().unwrap(),
            "--matrix",
            "laplacian",
        ]);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
    }
    assert_eq!(
        hookimm(&["poly", "--graph6", "!!", "--matrix", "laplacian"])
            .status
            .code(),
        Some(2)
    );
    // size limits
    let big = edge_file(&format!(
        "11 10\n{}",
        (1..11)
            .map(|i| format!("{i} {}\n", i + 1))
            .collect::<String>()
    ));
    let out = hookimm(&[
        "poly",
        "--edges",
        big.path().to_str().unwrap(),
        "--matrix",
        "laplacian",
        "--method",
        "oracle",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let out = hookimm(&[
        "poly",
        "--edges",
        big.path().to_str().unwrap(),
        "--matrix",
        "laplacian",
        "--k",
        "6",
    ]);
    assert!(out.status.success());
    assert_eq!(
        hookimm(&["poly", "--graph6", "J~~~~~~~~~w", "--matrix", "adjacency"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        hookimm(&["verify", "--suite", "oracle", "--n", "7"])
            .status
            .code(),
        Some(4)
    );
}
