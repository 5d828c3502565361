use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const PRISM: &str = "6 9\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n";
const C6: &str = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";

fn updom(args: &[&str], input: &str, env: &[(&str, &str)]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(input.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_owned();
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_updom"));
    cmd.env_remove("UPDOM_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let args: Vec<&str> = args.iter().map(|a| if *a == "FILE" { path.as_str() } else { a }).collect();
    cmd.args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn solve_prism() {
    let v = json(&updom(&["solve", "FILE"], PRISM, &[]));
    assert_eq!(v["size"], 3);
    assert_eq!(v["method"], "triangle");
}

#[test]
fn solve_brute_echoes_cap() {
    let v = json(&updom(&["solve", "--method", "brute", "FILE"], PRISM, &[("UPDOM_MAX_N", "10")]));
    assert_eq!(v["size"], 3);
    assert_eq!(v["cap"], 10);
}

#[test]
fn certify_q_on_c6() {
    let v = json(&updom(&["certify", "q", "FILE"], C6, &[]));
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["Gamma_Q"], 4);
    assert_eq!(v["identity"], "holds");
}

#[test]
fn classify_p5() {
    let v = json(&updom(&["classify", "FILE"], P5, &[]));
    assert_eq!(v["verdict"], "NPHard");
    assert_eq!(v["case"], "two-paths k+t>=5");
}

#[test]
fn one_document_per_graph6_line() {
    let out = updom(&["invariants", "FILE"], "Bw\nCF\n", &[]);
    assert!(out.status.success());
    let docs: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0]["Gamma"]["size"], 1);
    assert_eq!(docs[1]["Gamma"]["size"], 3);
}

#[test]
fn malformed_graph6_is_refused_with_offset() {
    let out = updom(&["solve", "FILE"], "E~~\n", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 3"));
}

#[test]
fn oversize_input_is_refused() {
    let out = updom(&["invariants", "FILE"], PRISM, &[("UPDOM_MAX_N", "5")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 5"));
}

#[test]
fn construct_output_is_graph6() {
    let out = updom(&["construct", "tripod", "1", "1", "1"], "", &[]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Cs");
    let out = updom(&["construct", "q", "FILE"], "1 0\n", &[]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "@");
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_updom"))
        .args(["recognize", "2k2-free", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4 2\n0 1\n2 3\n").unwrap();
    let v = json(&child.wait_with_output().unwrap());
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"], serde_json::json!([[0, 1], [2, 3]]));
}

#[test]
fn zk_needs_k() {
    let out = updom(&["recognize", "zk", "FILE"], C6, &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_criterion_sweep() {
    let v = json(&updom(&["sweep", "--criterion", "8", "--max-n", "4"], "", &[]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"][0]["id"], 8);
}
