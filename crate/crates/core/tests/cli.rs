use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-schur")).args(args).output().expect("binary runs")
}

fn eval(args: &[&str]) -> String {
    let out = run(&[&["eval"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn eval_t0_x1_identity() {
    let lhs = eval(&["--kind", "hecke", "--d", "1", "--expr", "T[s0]*X[1]^-1*T[s0]"]);
    let rhs = eval(&["--kind", "hecke", "--d", "1", "--expr", "q0^-1*q1*X[1] + (q0^-1*q1 - 1)*T[s0]"]);
    assert_eq!(lhs, rhs);
}

#[test]
fn eval_single_factor_actions() {
    let lhs = eval(&["--kind", "tensor", "--expr", "f_0 . v[0]"]);
    let rhs = eval(&["--kind", "tensor", "--expr", "q1*v[1] + v[-1]"]);
    assert_eq!(lhs, rhs);
    let e0 = eval(&["--kind", "tensor", "--r", "2", "--expr", "e_0 . v[5]"]);
    assert_eq!(e0, eval(&["--kind", "tensor", "--r", "2", "--expr", "q0^-1*v[6]"]));
}

#[test]
fn eval_reports_parse_position() {
    let out = run(&["eval", "--kind", "hecke", "--expr", "T[s0]*(X[1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn verify_json_report() {
    let out = run(&["verify", "--suite", "braid-td", "--d", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["suite"], "braid-td");
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn verify_rejects_bad_parameters() {
    let out = run(&["verify", "--suite", "commute", "--r", "1", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r"));
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn verify_specialized_module_relations() {
    let out = run(&["verify", "--suite", "module-relations", "--r", "2", "--d", "2", "--spec", "b1", "--window", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for c in v["checks"].as_array_mut().unwrap() {
            c["millis"] = 0.into();
        }
        v
    };
    let args = ["verify", "--suite", "hecke-relations", "--d", "2", "--format", "json"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}

#[test]
fn cache_dir_receives_tables() {
    let dir = std::env::temp_dir().join(format!("affine-schur-cli-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_affine-schur"))
        .args(["verify", "--suite", "hecke-relations", "--d", "2", "--max-len", "4"])
        .env("AFFINE_SCHUR_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("weyl-d2-l4.json").exists());
    std::fs::remove_dir_all(&dir).ok();
}
