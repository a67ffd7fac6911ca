use std::process::{Command, Output};

use serde_json::Value;

fn spexlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spexlab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn rho_of_s_plus() {
    let out = spexlab(&["rho", "--family", "s+:n=30,l=5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["tol"], 1e-12);
    let rho = v["result"]["rho"].as_f64().unwrap();
    // strictly between S_{30,5} and S_{30,5} with one extra independent edge bound
    let s = (4.0 + (16.0f64 + 20.0 * 25.0).sqrt()) / 2.0;
    assert!(rho > s && rho < s + 0.1, "{rho}");
    assert!(v["result"]["residual"].as_f64().unwrap() <= 1e-12 * rho);
}

#[test]
fn free_check_exit_codes() {
    let out = spexlab(&["free-check", "--t", "2", "--l", "4", "--family", "s++:n=12,l=3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["free"], true);
    let out = spexlab(&["free-check", "--t", "1", "--l", "3", "--family", "complete:n=3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["witness"][0].as_array().unwrap().len(), 3);
}

#[test]
fn formula_value() {
    let out = spexlab(&["formula", "ex-tc3", "--n", "14", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["value"]["integer"], 55);
    assert_eq!(v["result"]["range"], "proven");
    let out = spexlab(&["formula", "ex-tc3", "--n", "14", "--t", "2", "--csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "name,value,range\nex-tc3,55,proven\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(spexlab(&["rho"]).status.code(), Some(2));
    assert_eq!(spexlab(&["rho", "--graph6", "A_", "--family", "s:n=3,l=1"]).status.code(), Some(2));
    assert_eq!(spexlab(&["rho", "--graph6", "~~~"]).status.code(), Some(2));
    assert_eq!(spexlab(&["rho", "--family", "nonsense:n=3"]).status.code(), Some(2));
    assert_eq!(spexlab(&["formula", "ex-tc3", "--n", "14"]).status.code(), Some(2));
    assert_eq!(spexlab(&["search", "exhaustive", "--n", "12", "--t", "1", "--l", "1"]).status.code(), Some(2));
    assert_eq!(spexlab(&[]).status.code(), Some(2));
    let out = spexlab(&["rho", "--family", "s:n=3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
}

#[test]
fn edge_list_input_and_construct_formats() {
    let dir = std::env::temp_dir().join(format!("spexlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    std::fs::write(&path, "# a 5-cycle\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = spexlab(&["construct", "--edges", path.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "Dhc\n");
    let out = spexlab(&["pack", "--t", "1", "--l", "5", "--graph6", "Dhc", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn search_and_verify() {
    let out = spexlab(&["search", "exhaustive", "--n", "5", "--t", "1", "--l", "1"]);
    let v = json(&out);
    assert_eq!(v["result"]["best_value"], 6.0);
    assert_eq!(v["result"]["formula_matches"], true);

    let args = ["search", "climb", "--n", "10", "--t", "1", "--l", "2", "--parity", "even", "--seeds", "2", "--budget", "500", "--seed", "9"];
    let a = spexlab(&args);
    let b = spexlab(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["seed"], 9);
    let csv = spexlab(&[&args[..], &["--csv"]].concat());
    assert!(String::from_utf8_lossy(&csv.stdout).starts_with("seed,step,rho\n"));

    let out = spexlab(&["verify", "theorem15", "--n", "16", "--t", "1", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let out = spexlab(&["verify", "lemmas", "--ns", "12", "--ts", "2", "--ls", "2", "--samples", "2", "--csv"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("name,pass,skipped,expected,actual\n"));
}

#[test]
fn procedures_through_cli() {
    let out = spexlab(&["grow", "--family", "complete:n=12", "--triangle", "0,1,2", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["cycle"].as_array().unwrap().len(), 5);
    let out = spexlab(&["replace", "--family", "complete:n=30", "--t", "2", "--l", "2", "--triangles", "0,1,2;3,4,5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["packing"]["cycles"].as_array().unwrap().len(), 2);
    let out = spexlab(&["lemma53", "--family", "s+:n=30,l=5", "--t", "2", "--l", "3"]);
    assert_eq!(out.status.code(), Some(0));
    // below minimum degree: a semantic negative, not a usage error
    let out = spexlab(&["grow", "--family", "cycles:t=1,l=6", "--triangle", "0,1,2", "--l", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn schema_and_threads() {
    let out = spexlab(&["--schema"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["schema_version"], 1);
    let out = Command::new(env!("CARGO_BIN_EXE_spexlab"))
        .args(["verify", "theorem11", "--n", "12", "--t", "2", "--l", "2"])
        .env("SPEXLAB_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.code().unwrap() <= 1);
    assert_eq!(spexlab(&["--threads", "0", "--schema"]).status.code(), Some(0));
    assert_eq!(spexlab(&["--threads", "0", "formula", "ex-tc3", "--n", "3", "--t", "1"]).status.code(), Some(2));
}
