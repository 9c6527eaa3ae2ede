use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclodep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SMALL: [&str; 4] = ["--torsion-order", "4", "--scan-height", "10"];

#[test]
fn analyze_schema_and_exit_code() {
    let mut args = vec!["analyze", "--curve", "(t-1)^2; t"];
    args.extend(SMALL);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for key in [
        "curve",
        "map_degree",
        "assumption",
        "phi",
        "fibers",
        "scan",
        "summary",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["phi"].as_array().unwrap().len(), 6);
    let phi0 = &v["phi"][0];
    for key in ["a", "P", "Q", "m", "c", "realizable_cyclotomic"] {
        assert!(phi0.get(key).is_some(), "missing phi.{key}");
    }
    let fiber0 = &v["fibers"][0];
    for key in ["char", "N", "factors"] {
        assert!(fiber0.get(key).is_some(), "missing fibers.{key}");
    }
    let scan0 = &v["scan"][0];
    for key in [
        "t",
        "point",
        "dependent",
        "primitive",
        "relation",
        "height",
        "class",
    ] {
        assert!(scan0.get(key).is_some(), "missing scan.{key}");
    }
    assert_eq!(scan0["t"], "2/1");
    assert!(v["summary"]["max_dependent_height"].is_f64());
    assert_eq!(v["summary"]["exceptional_count"], 0);
}

#[test]
fn analyze_is_byte_deterministic_across_execution_modes() {
    let mut args = vec!["analyze", "--curve", "(t-1)^2; t"];
    args.extend(SMALL);
    let a = run(&args);
    let b = run(&args);
    let mut seq = args.clone();
    seq.push("--sequential");
    let c = run(&seq);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "--curve", "t; (t"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--curve", "t"]).status.code(), Some(2));
    let out = run(&["analyze", "--curve", "2; t"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(
        json(&out)["assumption"]["violation"],
        serde_json::json!([1, 0])
    );
    assert_eq!(
        run(&["analyze", "--curve", "t^2; t^4"]).status.code(),
        Some(4)
    );
    assert_eq!(run(&["check", "--curve", "t; 2*t"]).status.code(), Some(3));
    assert_eq!(
        run(&["check", "--curve", "(t-1)^3; t"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["phi", "--curve", "t; t"]).status.code(), Some(3));
    assert_eq!(run(&["depends", "--point", "1,x"]).status.code(), Some(2));
}

#[test]
fn point_commands() {
    let v = json(&run(&["depends", "--point", "2,8"]));
    assert_eq!(v["dependent"], true);
    assert_eq!(v["relation_lattice"], serde_json::json!([[3, -1]]));

    let v = json(&run(&["primitive", "--point", "-1,2"]));
    assert_eq!(v["dependent"], true);
    assert_eq!(v["primitive"], false);
    assert_eq!(v["min_content"], "2");

    let v = json(&run(&["primitive", "--point", "4,8"]));
    assert_eq!(v["relation"], serde_json::json!([3, -2]));

    let v = json(&run(&["decompose", "--point", "4, 8"]));
    assert_eq!(v["generators"], serde_json::json!(["2/1"]));
    assert_eq!(v["exponents"], serde_json::json!([["2"], ["3"]]));
}

#[test]
fn fiber_command() {
    let out = run(&[
        "fiber",
        "--curve",
        "(t-1)^3; t",
        "--char",
        "0,1",
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["factors"], serde_json::json!(["t + 1"]));
    assert_eq!(v["discarded"], serde_json::json!(["t - 1"]));
    let out = run(&[
        "fiber",
        "--curve",
        "(t-1)^3; t",
        "--char",
        "1,1",
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn phi_command_text() {
    let out = run(&["--format", "text", "phi", "--curve", "(t-1)^3; t"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("(1,-3) P=1/1 Q=0/1 m=3 c=1/1"));
}
