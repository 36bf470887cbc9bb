use std::path::PathBuf;
use std::process::Command;

use fzalg::problem::ProblemFile;
use fzalg_core::intlat::{IntegerLattice, ZVec};
use fzalg_core::unitgrp::same_subgroup;
use fzalg_core::Context;
use num_bigint::BigInt;
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn fzalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fzalg")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(cmd: &str, file: &str, extra: &[&str]) -> Value {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap(), "--json"];
    args.extend_from_slice(extra);
    let (code, out, err) = fzalg(&args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("valid json")
}

fn rows(v: &Value) -> Vec<ZVec> {
    v.as_array().unwrap().iter().map(|r| r.as_array().unwrap().iter().map(|x| BigInt::from(x.as_i64().unwrap())).collect()).collect()
}

fn lattice(k: usize, v: &Value) -> IntegerLattice {
    IntegerLattice::new(k, rows(v))
}

#[test]
fn explattice_mod_eight_with_trace() {
    let v = json("explattice", "mod8.fz", &["--verbose"]);
    let want = IntegerLattice::from_i64(3, &[&[0, 2, 0], &[2, 0, 2], &[-2, 0, 2]]);
    assert_eq!(lattice(3, &v["result"]["lattice_basis"]), want);
    let trace = v["result"]["trace"].as_array().unwrap();
    let m1 = trace.iter().find(|s| s["label"].as_str().unwrap().starts_with("solution space lifting 2^1")).unwrap();
    assert_eq!(lattice(3, &m1["lattice_basis"]), IntegerLattice::from_i64(3, &[&[0, 1, 0], &[2, 0, 0], &[0, 0, 2]]));
    assert_eq!(v["result"]["provenance"]["lattice_completeness"], "certified");
    assert_eq!(v["command"], "explattice");
    assert_eq!(v["seed"], 0);
    assert!(v["timing_ms"].is_u64());
}

#[test]
fn explattice_nilpotent_example() {
    let v = json("explattice", "nilpotent.fz", &[]);
    assert_eq!(lattice(3, &v["result"]["lattice_basis"]), IntegerLattice::from_i64(3, &[&[0, 6, 0], &[0, 0, 3]]));
    assert_eq!(v["result"]["module_rank"], 8);
    assert_eq!(v["result"]["torsion_exponent"], 6);
}

#[test]
fn units_round_trip_through_json() {
    let v = json("units", "radical.fz", &[]);
    let src = std::fs::read_to_string(data("radical.fz")).unwrap();
    let pf = ProblemFile::parse(&src).unwrap();
    let ctx = Context::new(0);
    let r = pf.algebra(&ctx).unwrap();
    let gens: Vec<String> = v["result"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect();
    let reparsed = ProblemFile::parse(&format!("{src}\nelements:\n{}\n", gens.join("\n"))).unwrap().elements(&r).unwrap();
    for (g, e) in gens.iter().zip(&reparsed) {
        assert_eq!(&r.display(e), g);
    }
    let known = ProblemFile::parse(&format!("{src}\nelements: 1+y, 1+x, 1+x^2, 1+x*y, 1+x^2*y\n")).unwrap().elements(&r).unwrap();
    assert!(same_subgroup(&r, &reparsed, &known, &ctx).unwrap());
    let canon = |vs: &[ZVec]| vs.iter().map(|v| r.canon(v)).collect::<std::collections::BTreeSet<_>>();
    assert_eq!(canon(&reparsed), canon(&known));
    assert_eq!(v["result"]["provenance"]["unit_provider"], "exact");
}

#[test]
fn structure_with_oracle_check() {
    let v = json("structure", "f25.fz", &["--check"]);
    assert_eq!(v["result"]["rank"], 0);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!([24]));
    assert_eq!(v["result"]["check"]["status"], "passed");
    assert!(v["result"].get("generators").is_none());
}

#[test]
fn minimal_primes_of_two_copies() {
    let v = json("minimal-primes", "two_copies.fz", &[]);
    let ps = v["result"]["primes"].as_array().unwrap();
    assert_eq!(ps.len(), 2);
    assert!(ps.iter().all(|p| p["characteristic"] == 0));
}

#[test]
fn idempotents_and_nilradical() {
    let v = json("idempotents", "three_copies.fz", &[]);
    assert_eq!(v["result"]["rational_idempotents"].as_array().unwrap().len(), 4);
    let v = json("nilradical", "radical.fz", &[]);
    assert_eq!(v["result"]["nilradical"], serde_json::json!(["x"]));
    assert_eq!(v["result"]["nilpotency_index"], 3);
    let v = json("decompose", "mixed.fz", &[]);
    assert_eq!(v["result"]["primes"].as_array().unwrap().len(), 3);
    assert_eq!(v["result"]["idempotents"].as_array().unwrap().len(), 2);
}

#[test]
fn explicit_presentations() {
    let v = json("units", "gaussian_explicit.fz", &[]);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!([4]));
    let v = json("units", "z6_explicit.fz", &["--check"]);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!([2]));
    assert_eq!(v["result"]["check"]["status"], "passed");
}

#[test]
fn seeds_are_reproducible() {
    let a = json("units", "mixed.fz", &["--seed", "7"]);
    let b = json("units", "mixed.fz", &["--seed", "7"]);
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["result"]["provenance"]["unit_provider"], "bounded_search");
}

#[test]
fn exit_codes() {
    let p = |f: &str| data(f).to_str().unwrap().to_string();
    assert_eq!(fzalg(&["units", &p("bad_syntax.fz")]).0, 2);
    assert_eq!(fzalg(&["units", &p("no_such_file.fz")]).0, 2);
    assert_eq!(fzalg(&["explattice", &p("radical.fz")]).0, 2);
    assert_eq!(fzalg(&["units", &p("not_finite.fz")]).0, 3);
    assert_eq!(fzalg(&["units", &p("septic.fz")]).0, 4);
    assert_eq!(fzalg(&["explattice", &p("large.fz"), "--check"]).0, 5);
    let (code, _, err) = fzalg(&["units", &p("bad_syntax.fz")]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn text_output() {
    let (code, out, _) = fzalg(&["explattice", data("mod8.fz").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("lattice basis:"));
    assert!(out.contains("(0, 2, 0)"));
}

#[test]
fn timeout_aborts() {
    let start = std::time::Instant::now();
    let (code, out, err) = fzalg(&["units", data("slow.fz").to_str().unwrap(), "--timeout", "1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("timed out"), "{err}");
    assert!(start.elapsed() < std::time::Duration::from_secs(20));
}
