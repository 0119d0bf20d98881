use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetalift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (out.status.code().unwrap(), v)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

fn assert_schema(v: &Value) {
    assert!(v["command"].is_string());
    assert!(v["params"].is_object());
    assert!(v["conventions"].is_object());
    assert!(v["seed"].is_u64());
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert!(["pass", "fail", "skip"].contains(&c["status"].as_str().unwrap()));
        if let Some(w) = c.get("witness") {
            assert!(w.is_object());
        }
    }
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
}

#[test]
fn orbit_command() {
    let (code, v) = json(&["orbit", "--r", "3", "--twol", "8"]);
    assert_eq!(code, 0);
    assert_schema(&v);
    let w = &check(&v, "orbit")["witness"];
    assert_eq!(w["partition"], serde_json::json!([3, 3, 2]));
    assert_eq!(w["orbit_dim"], 24);
    assert_eq!(w["gk_dim"], "12");

    let (_, v) = json(&["orbit", "--r", "5", "--twol", "4"]);
    assert_eq!(check(&v, "orbit")["witness"]["partition"], serde_json::json!([4]));
    let (_, v) = json(&["orbit", "--twol", "4"]);
    let w = &check(&v, "orbit")["witness"];
    assert_eq!(w["partition"], serde_json::json!([2, 2]));
    assert_eq!(w["orbit_dim"], 6);
    assert_eq!(v["params"]["r"], 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["orbit", "--twol", "7"]).status.code(), Some(2));
    assert_eq!(run(&["orbit", "--r", "4", "--twol", "8"]).status.code(), Some(2));
    assert_eq!(run(&["--p", "9", "verify", "orbits"]).status.code(), Some(2));
    assert_eq!(run(&["--p", "3", "verify", "cocycle"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["cocycle", "--r", "4", "--a", "7", "--b", "3"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn dimeq_command() {
    for (r, k, side) in [("3", "3", "16"), ("3", "4", "38"), ("5", "3", "46")] {
        let (code, v) = json(&["dimeq", "--r", r, "--k", k]);
        assert_eq!(code, 0);
        let c = check(&v, "dimension_equation");
        assert_eq!(c["status"], "pass");
        assert_eq!(c["witness"]["lhs"], side);
        assert_eq!(c["witness"]["rhs"], side);
    }
}

#[test]
fn exponents_command() {
    let (code, v) = json(&["exponents", "--r", "3", "--k", "4", "--n", "2"]);
    assert_eq!(code, 0);
    assert_schema(&v);
    let w = &check(&v, "ledger_identity")["witness"];
    assert_eq!((w["sum"].as_i64(), w["target"].as_i64()), (Some(10), Some(10)));
    let (code, v) = json(&["exponents", "--r", "5", "--k", "3", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(check(&v, "ledger_identity")["witness"]["sum"], 20);
    assert_eq!(check(&v, "exponent_equation_solutions")["witness"]["solutions"], serde_json::json!([4]));
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn cocycle_command() {
    let (code, v) = json(&["cocycle", "--r", "3", "--a", "7", "--b", "3"]);
    assert_eq!(code, 0);
    let w = &check(&v, "hilbert_symbol")["witness"];
    assert_eq!(w["exponent"], 2);
    assert_eq!(w["order"], 3);
    let (_, v) = json(&["cocycle", "--r", "2", "--a", "7", "--b", "3"]);
    assert_eq!(check(&v, "hilbert_symbol")["witness"]["exponent"], 1);
    let (_, v) = json(&["cocycle", "--a", "-5/2", "--b", "5/2"]);
    assert_eq!(check(&v, "hilbert_symbol")["witness"]["exponent"], 0);
}

#[test]
fn dualgroup_command() {
    for (fam, rank, r, want) in [("sp", "6", "3", "SO_7(C)"), ("so", "7", "3", "Sp_6(C)"), ("so", "6", "5", "SO_6(C)"), ("sp", "6", "2", "Sp_6(C)")] {
        let (code, v) = json(&["dualgroup", "--family", fam, "--rank", rank, "--r", r]);
        assert_eq!(code, 0);
        assert_eq!(check(&v, "dual_group")["witness"]["descriptor"], want);
    }
}

#[test]
fn verify_passes_and_fails_with_witnesses() {
    for suite in ["embed", "cocycle", "weyl", "characters"] {
        let (code, v) = json(&["--iters", "5", "--seed", "42", "verify", suite]);
        assert_eq!(code, 0, "{suite}");
        assert_schema(&v);
        assert_eq!(v["seed"], 42);
    }
    let (code, v) = json(&["verify", "orbits"]);
    assert_eq!(code, 1);
    assert_eq!(check(&v, "orbits_dim_oracle_agreement")["status"], "pass");
    let failing: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["name"], "orbits_hook_grid_incomparable");
    assert!(failing[0]["witness"].is_object());

    let (code, v) = json(&["--iters", "40", "verify", "heisenberg"]);
    assert_eq!(code, 1);
    let odd = check(&v, "heisenberg_l_map_homomorphism_odd");
    assert_eq!(odd["status"], "fail");
    assert!(odd["witness"]["inputs"]["u"].is_object());
    assert_eq!(check(&v, "heisenberg_l_map_homomorphism_even")["status"], "pass");
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["--json", "--iters", "10", "--seed", "7", "verify", "embed"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = ["--iters", "10", "verify", "cocycle"];
    assert_eq!(run(&text).stdout, run(&text).stdout);
    let other = run(&["--json", "--iters", "10", "--seed", "8", "verify", "embed"]);
    assert_eq!(other.status.code(), Some(0));
}

#[test]
fn text_output_lists_checks() {
    let out = run(&["dimeq", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("dimension_equation"));
    assert!(s.contains("pass"));
}
