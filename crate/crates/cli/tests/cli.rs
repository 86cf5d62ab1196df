use std::process::{Command, Output};

use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = schubert(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn projection_example() {
    let out = schubert(&["pi-p", "--type", "A3", "--ip", "2,3", "--coroot", "-1,0,0"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"w":"r2 r3","t":"-1,-1,-1"}"#);
    let b3 = json(&["pi-p", "--type", "B3", "--ip", "2,3", "--coroot", "-1,0,0"]);
    assert_eq!(b3["w"], "r2 r3 r2");
}

#[test]
fn equivariant_a1_square() {
    let v = json(&["qh", "product", "--type", "A1", "--u", "s1", "--v", "s1", "--equivariant"]);
    assert_eq!(v, serde_json::json!({"(s1,)": "a1", "(id,q1)": "1"}));
    let v = json(&["qh", "product", "--type", "A1", "--u", "s1", "--v", "s1"]);
    assert_eq!(v, serde_json::json!({"(id,q1)": "1"}));
}

#[test]
fn gw_routes_agree() {
    for route in ["quantum", "affine"] {
        let v = json(&["qh", "gw", "--type", "A1", "--u", "s1", "--v", "s1", "--w", "id", "--q", "1", "--route", route]);
        assert_eq!(v["value"], "1", "{route}");
    }
    assert_eq!(schubert(&["qh", "gw", "--type", "A1", "--u", "s1", "--v", "s1", "--w", "id", "--route", "bogus"]).status.code(), Some(2));
}

#[test]
fn affine_grassmannian_a1() {
    let v = json(&["gr", "product", "--type", "A1", "--x", "0", "--y", "0"]);
    assert_eq!(v["product"][0]["word"], "r1 r0");
    assert_eq!(v["product"][0]["coefficient"], "1");
    let p = json(&["gr", "pieri0", "--type", "A1", "--x", "0"]);
    assert_eq!(p["product"], v["product"]);
    let j = json(&["gr", "j-class", "--type", "A1", "--x", "r1|-8"]);
    assert_eq!(j["j"].as_array().unwrap().len(), 3);
}

#[test]
fn lapointe_morse_example() {
    let v = json(&["lm-map", "--n", "7", "--j", "4", "--partition", "3,2"]);
    assert_eq!(v["x"], "r0 r6 r2 r1 r0");
    assert_eq!(v["image"], "r4 r5 r2 r3 r4");
    let zero = json(&["lm-map", "--n", "4", "--j", "2", "--x", "2 1 0"]);
    assert_eq!(zero["image"], Value::Null);
}

#[test]
fn lift_and_duality() {
    let v = json(&["pw-lift", "--type", "A3", "--ip", "2,3", "--coroot", "-1,0,0"]);
    assert_eq!(v["lambda_b"], "-1,-1,-1");
    assert_eq!(v["v"], "r2 r3");
    let one = json(&["strange-dual", "--n", "4", "--j", "2", "--w", "id"]);
    assert_eq!(one, serde_json::json!({"(id,)": "1"}));
    let d = json(&["strange-dual", "--n", "4", "--j", "2", "--w", "r2"]);
    assert_eq!(d.as_object().unwrap().len(), 1);
}

#[test]
fn weyl_and_graph_commands() {
    let v = json(&["weyl", "length", "--type", "A2", "--x", "id|-1,-1"]);
    assert_eq!(v["length"], 4);
    let g = json(&["weyl", "grassmannian", "--type", "A2", "--x", "0"]);
    assert_eq!(g["grassmannian"], true);
    let c = json(&["weyl", "covers", "--type", "A2", "--x", "id|-1,-1"]);
    assert_eq!(c["covers"].as_array().unwrap().len(), 3);
    let dot = schubert(&["qbg", "export", "--type", "A2", "--dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
    let t = json(&["qbg", "tilted", "--type", "A2", "--u", "s1"]);
    assert_eq!(t["embedding"].as_array().unwrap().len(), 6);
    let r = json(&["rootsys", "show", "--type", "B2"]);
    assert_eq!(r["rank"], 2);
}

#[test]
fn verify_exit_codes() {
    let out = schubert(&["verify", "compare", "--type", "A2", "--qdeg", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(schubert(&["verify", "nonsense"]).status.code(), Some(2));
    let list = json(&["verify", "--list"]);
    assert_eq!(list.as_array().unwrap().len(), 11);
}

#[test]
fn argument_errors_exit_two() {
    assert_eq!(schubert(&["pi-p", "--type", "A3", "--ip", "2,3", "--coroot", "-1,0"]).status.code(), Some(2));
    assert_eq!(schubert(&["pi-p", "--type", "Q3", "--ip", "2", "--coroot", "0,0,0"]).status.code(), Some(2));
    assert_eq!(schubert(&["qh", "product", "--type", "A2", "--u", "x1"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["qh", "product", "--type", "B2", "--u", "s1s2", "--v", "s2s1", "--equivariant"];
    assert_eq!(schubert(&args).stdout, schubert(&args).stdout);
}
